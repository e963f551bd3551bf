"""
Validation error tests for experiment configurations.

Tests validation logic that raises ConfigValidationError for invalid
configurations. Happy path (valid configs) is covered by the harness tests.
"""

import pytest

from tomoqa.lib.config_parser import parse_config
from tomoqa.presets import list_presets, preset_path
from tomoqa.types import ConfigValidationError
from tomoqa.validation.config import ExperimentConfig, validate_config


def _config(**overrides):
    data = {
        "kind": "size_sweep",
        "phantoms": ["foam"],
        "sizes": [4],
        "methods": ["fbp"],
        "seeds": [1],
    }
    data.update(overrides)
    return data


class TestConfigParsing:
    """Parsing error tests"""

    def test_invalid_yaml_syntax(self):
        with pytest.raises(ConfigValidationError, match="Invalid YAML"):
            parse_config("kind: size_sweep\nphantoms: [unclosed bracket\n")

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"kind": "size_sweep",')
        with pytest.raises(ConfigValidationError, match="Invalid JSON"):
            parse_config(path)

    def test_not_a_mapping(self):
        with pytest.raises(ConfigValidationError, match="mapping"):
            parse_config("- foam\n- tree\n")

    def test_yaml_and_json_files_agree(self, tmp_path):
        yaml_path = tmp_path / "a.yaml"
        json_path = tmp_path / "a.json"
        yaml_path.write_text("kind: size_sweep\nphantoms: [foam]\nsizes: [4]\nmethods: [fbp]\nseeds: [1]\n")
        json_path.write_text(
            '{"kind": "size_sweep", "phantoms": ["foam"], "sizes": [4], "methods": ["fbp"], "seeds": [1]}'
        )
        assert validate_config(yaml_path) == validate_config(json_path)


class TestExperimentValidation:
    """Configuration-level validation errors"""

    def test_unknown_kind(self):
        with pytest.raises(ConfigValidationError, match="kind"):
            validate_config(_config(kind="sinogram_sweep"))

    def test_unknown_key(self):
        with pytest.raises(ConfigValidationError, match="sampler"):
            validate_config(_config(sampler="neal"))

    def test_unknown_phantom(self):
        with pytest.raises(ConfigValidationError, match="unknown phantom 'spiral'"):
            validate_config(_config(phantoms=["spiral"]))

    def test_digit_out_of_range(self):
        with pytest.raises(ConfigValidationError, match="digit must be in 0..9"):
            validate_config(_config(phantoms=["digit:12"], sizes=[8]))

    @pytest.mark.parametrize("size", [2, 6, 64])
    def test_size_not_supported(self, size):
        with pytest.raises(ConfigValidationError, match=f"size {size} must be a power of two"):
            validate_config(_config(sizes=[size]))

    def test_unknown_method(self):
        with pytest.raises(ConfigValidationError, match="methods"):
            validate_config(_config(methods=["art"]))

    def test_duplicate_seeds(self):
        with pytest.raises(ConfigValidationError, match="unique"):
            validate_config(_config(seeds=[1, 1]))

    def test_empty_lists(self):
        with pytest.raises(ConfigValidationError, match="phantoms"):
            validate_config(_config(phantoms=[]))

    def test_underdetermined_needs_views(self):
        with pytest.raises(ConfigValidationError, match="'views' list"):
            validate_config(_config(kind="underdetermined"))

    def test_size_sweep_rejects_views(self):
        with pytest.raises(ConfigValidationError, match="views = size"):
            validate_config(_config(views=[2]))

    def test_non_positive_views(self):
        with pytest.raises(ConfigValidationError, match="view counts must be >= 1"):
            validate_config(_config(kind="underdetermined", views=[0, 2]))

    def test_digits_need_size_eight(self):
        with pytest.raises(ConfigValidationError, match="sizes to \\[8\\]"):
            validate_config(_config(phantoms=["digit:3"], sizes=[4]))

    def test_digits_row_needs_file(self):
        with pytest.raises(ConfigValidationError, match="digits_path"):
            validate_config(_config(phantoms=["digits_row:0"], sizes=[8]))

    def test_bits_too_small_for_phantom(self):
        with pytest.raises(ConfigValidationError, match="bits=1 cannot represent phantom 'shepp_logan'"):
            validate_config(_config(phantoms=["shepp_logan"], bits=1))

    @pytest.mark.parametrize("key,value", [
        ("time_limit", 0),
        ("iterations", 0),
        ("reads", 0),
        ("sweeps", -1),
        ("threads", 0),
        ("bits", 17),
    ])
    def test_budget_bounds(self, key, value):
        with pytest.raises(ConfigValidationError, match=key):
            validate_config(_config(**{key: value}))


class TestOverrides:

    def test_overrides_replace_values(self):
        config = validate_config(_config(reads=10), {"reads": 20, "iterations": 4})
        assert config.reads == 20
        assert config.deterministic

    def test_none_overrides_are_ignored(self):
        config = validate_config(_config(reads=10), {"reads": None})
        assert config.reads == 10

    def test_overrides_are_validated(self):
        with pytest.raises(ConfigValidationError, match="sizes"):
            validate_config(_config(), {"sizes": [3]})


class TestPresets:

    def test_every_preset_validates(self):
        assert set(list_presets()) >= {
            "size_sweep_binary", "size_sweep_integer", "noise_eval", "underdetermined", "paper_scale",
            "paper_scale_integer", "paper_scale_noise", "paper_scale_underdetermined",
        }
        for name in list_presets():
            assert isinstance(validate_config(preset_path(name)), ExperimentConfig)

    def test_paper_scale_presets(self):
        integer = validate_config(preset_path("paper_scale_integer"))
        assert (integer.sizes, integer.bits, integer.phantoms) == ([4, 8, 16, 32], 4, ["shepp_logan"])
        noise = validate_config(preset_path("paper_scale_noise"))
        assert noise.kind == "noise_eval"
        assert len(noise.phantoms) * len(noise.seeds) >= 32
        under = validate_config(preset_path("paper_scale_underdetermined"))
        assert (under.sizes, under.views) == ([32], [2, 4])

    def test_unknown_preset(self):
        with pytest.raises(ConfigValidationError, match="unknown preset 'nope'"):
            preset_path("nope")
