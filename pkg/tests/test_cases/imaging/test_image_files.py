"""
ASCII PGM files and the digits CSV.
"""

import pytest

from tomoqa.imaging import (
    DigitsFormatError,
    Image,
    PgmParseError,
    generate_phantom,
    load_digits_csv,
    load_pgm,
    save_pgm,
)


def test_pgm_round_trip(tmp_path):
    img = generate_phantom("shepp_logan", 8)
    path = tmp_path / "phantom.pgm"
    save_pgm(img, path)
    assert load_pgm(path) == img


@pytest.mark.parametrize("bit_depth", [1, 2, 4, 8, 16])
def test_random_pgm_round_trip(tmp_path, rng, bit_depth):
    for side in (1, 3, 8):
        pixels = rng.integers(0, 1 << bit_depth, size=side * side)
        pixels[0] = (1 << bit_depth) - 1
        img = Image(side=side, bit_depth=bit_depth, pixels=pixels)
        path = tmp_path / f"r{bit_depth}_{side}.pgm"
        save_pgm(img, path)
        assert load_pgm(path) == img


def test_minimal_pgm_body(tmp_path):
    path = tmp_path / "one.pgm"
    save_pgm(Image(side=1, bit_depth=1, pixels=[0]), path)
    assert path.read_text() == "P2\n1 1\n1\n0\n"


def test_pgm_tokens_may_span_lines_and_have_comments(tmp_path):
    path = tmp_path / "c.pgm"
    path.write_text("P2 # ascii\n2\n2 3\n0 1\n2\n3\n")
    img = load_pgm(path)
    assert img.bit_depth == 2
    assert img.pixels.tolist() == [0, 1, 2, 3]


@pytest.mark.parametrize("body, line, message", [
    ("P5\n1 1\n1\n0\n", 1, "magic"),
    ("P2\n2 1\n1\n0 0\n", 2, "square"),
    ("P2\n1 1\n5\n0\n", 3, "2\\^R - 1"),
    ("P2\n2 2\n1\n0 1\n1 2\n", 5, "outside"),
    ("P2\n2 2\n1\n0 1\n1\n", 5, "end of file"),
    ("P2\n1 1\n1\nx\n", 4, "non-negative integer"),
])
def test_malformed_pgm(tmp_path, body, line, message):
    path = tmp_path / "bad.pgm"
    path.write_text(body)
    with pytest.raises(PgmParseError, match=message) as info:
        load_pgm(path)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_digits_rows(tmp_path):
    path = tmp_path / "digits.csv"
    path.write_text(
        ",".join(["0"] * 64) + ",7\n"
        + ",".join(["16"] * 64) + "\n"
        + ",".join(["1"] * 63) + "\n"
    )
    zeros = load_digits_csv(path, 0)
    assert (zeros.side, zeros.bit_depth) == (8, 4)
    assert not zeros.pixels.any()

    full = load_digits_csv(path, 1)
    assert full.pixels.tolist() == [15] * 64

    with pytest.raises(DigitsFormatError, match="64 pixel columns") as info:
        load_digits_csv(path, 2)
    assert info.value.line == 3

    with pytest.raises(DigitsFormatError, match="not found"):
        load_digits_csv(path, 9)


def test_digits_non_integer_cell(tmp_path):
    path = tmp_path / "digits.csv"
    path.write_text(",".join(["3"] * 10 + ["x"] + ["3"] * 53) + "\n")
    with pytest.raises(DigitsFormatError, match="column 11"):
        load_digits_csv(path, 0)
