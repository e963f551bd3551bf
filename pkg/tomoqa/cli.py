"""
Command-line interface.

    tomoqa gen        --phantom <spec> --size <N> --out <pgm>
    tomoqa project    --in <pgm> --views <V> [--noise-seed <s>] --out <csv>
    tomoqa recon      --method {qa,hybrid,fbp,sart,pinv} --views <V> --in <csv> --out <pgm>
    tomoqa experiment --config <json|yaml|preset> --out <dir>

Exit codes: 0 success, 1 a reconstruction run failed, 2 invalid
configuration or input.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .forward.geometry import angle_set, build_system_matrix
from .forward.matrix_io import dump_system_matrix
from .forward.projection import project
from .forward.sinogram_io import load_sinogram_csv, save_sinogram_csv
from .imaging.pgm import load_pgm, save_pgm
from .init import create_all_methods, setup_experiment
from .lib.phantom_spec import resolve_phantom
from .local_backends import create_in_memory_backends
from .methods.types import METHOD_NAMES, MethodSettings, ReconstructionProblem
from .noise.additive import apply_noise
from .presets import preset_path
from .report.emit import emit_report
from .broker import run_experiment
from .types import TomoqaError
from .validation.config import validate_config

EXIT_OK = 0
EXIT_RUN_FAILED = 1
EXIT_INVALID = 2

DEFAULT_OUTPUT_DIR = "tomoqa_results"


def _fail(message: str, code: int) -> int:
    print(f"tomoqa: error: {message}", file=sys.stderr)
    return code


def cmd_gen(args: argparse.Namespace) -> int:
    image = resolve_phantom(args.phantom, args.size, args.digits_path)
    save_pgm(image, args.out)
    return EXIT_OK


def cmd_project(args: argparse.Namespace) -> int:
    image = load_pgm(args.input)
    matrix = build_system_matrix(image.side, angle_set(args.views))
    if args.noise_seed is None:
        sinogram = project(matrix, image)
    else:
        sinogram = apply_noise(image, matrix, seed=args.noise_seed)
    save_sinogram_csv(sinogram, args.out)
    if args.dump_matrix:
        dump_system_matrix(matrix, args.dump_matrix)
    return EXIT_OK


def cmd_recon(args: argparse.Namespace) -> int:
    sinogram = load_sinogram_csv(args.input)
    if sinogram.views != args.views:
        return _fail(
            f"--views {args.views} does not match the {sinogram.views} views in {args.input}",
            EXIT_INVALID,
        )
    matrix = build_system_matrix(sinogram.bins, angle_set(args.views))
    settings = MethodSettings(
        reads=args.reads,
        sweeps=args.sweeps,
        time_limit=args.time_limit,
        iterations=args.iters,
        subproblem_size=args.subproblem_size,
        debug_dir=args.debug_dir,
    )
    methods = create_all_methods(create_in_memory_backends(), settings)
    problem = ReconstructionProblem(matrix=matrix, sinogram=sinogram, bits=args.bits, seed=args.seed)
    try:
        result = methods[args.method]("recon", problem)
    except TomoqaError as e:
        return _fail(f"{args.method} reconstruction failed: {e}", EXIT_RUN_FAILED)
    save_pgm(result.image, args.out)
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    source = Path(args.config)
    if not source.is_file():
        source = preset_path(args.config)
    overrides = {
        "iterations": args.iters,
        "time_limit": args.time_limit,
        "reads": args.reads,
        "sweeps": args.sweeps,
        "threads": args.threads,
        "subproblem_size": args.subproblem_size,
        "digits_path": args.digits_path,
        "output_dir": args.out,
    }
    config = validate_config(source, overrides)
    outdir = Path(config.output_dir or DEFAULT_OUTPUT_DIR)
    config, backends, methods = setup_experiment(
        config, use_local_storage=True, storage_dir=str(outdir), debug_dir=args.debug_dir
    )

    table = run_experiment(config, backends, methods)
    written = emit_report(table, outdir, backends)

    print(
        f"{table.experiment}: {len(table.rows)} runs completed, "
        f"{len(table.errors)} failed; {len(written)} files in {outdir}"
    )
    for error in table.errors:
        print(
            f"  failed: {error.phantom} N={error.size} V={error.views} {error.method} "
            f"seed={error.seed}: {error.error}",
            file=sys.stderr,
        )
    return EXIT_RUN_FAILED if table.failed else EXIT_OK


def _add_budget_options(parser: argparse.ArgumentParser, defaults: bool) -> None:
    parser.add_argument("--reads", type=int, default=100 if defaults else None,
                        help="annealing reads per sampler call")
    parser.add_argument("--sweeps", type=int, default=1000 if defaults else None,
                        help="annealing sweeps per read")
    budget = parser.add_mutually_exclusive_group()
    budget.add_argument("--time-limit", type=float, default=5.0 if defaults else None,
                        help="hybrid wall-clock budget in seconds")
    budget.add_argument("--iters", type=int, default=None,
                        help="hybrid iteration budget (deterministic mode)")
    parser.add_argument("--subproblem-size", type=int, default=12 if defaults else None,
                        help="pixels freed per hybrid block move")
    parser.add_argument("--debug-dir", default=None,
                        help="export every hybrid sub-QUBO into this directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tomoqa",
        description="Tomographic reconstruction as QUBO/Ising optimization",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate a phantom as ASCII PGM")
    gen.add_argument("--phantom", required=True,
                     help="shepp_logan, foam, tree, snowflake, molecule, digit:<d> or digits_row:<i>")
    gen.add_argument("--size", type=int, required=True, help="image side N")
    gen.add_argument("--digits-path", default=None, help="digits CSV for digits_row:<i>")
    gen.add_argument("--out", required=True, help="output PGM path")
    gen.set_defaults(handler=cmd_gen)

    proj = commands.add_parser("project", help="project a PGM image to a sinogram CSV")
    proj.add_argument("--in", dest="input", required=True, help="input PGM path")
    proj.add_argument("--views", type=int, required=True, help="number of view angles")
    proj.add_argument("--noise-seed", type=int, default=None, help="add per-view noise with this seed")
    proj.add_argument("--dump-matrix", default=None, help="also write the system matrix here")
    proj.add_argument("--out", required=True, help="output sinogram CSV path")
    proj.set_defaults(handler=cmd_project)

    recon = commands.add_parser("recon", help="reconstruct an image from a sinogram CSV")
    recon.add_argument("--method", choices=METHOD_NAMES, required=True)
    recon.add_argument("--views", type=int, required=True, help="number of view angles")
    recon.add_argument("--bits", type=int, default=1, help="bits per pixel R of the result")
    recon.add_argument("--seed", type=int, default=0, help="sampler seed")
    _add_budget_options(recon, defaults=True)
    recon.add_argument("--in", dest="input", required=True, help="input sinogram CSV path")
    recon.add_argument("--out", required=True, help="output PGM path")
    recon.set_defaults(handler=cmd_recon)

    exp = commands.add_parser("experiment", help="run an experiment and write its report")
    exp.add_argument("--config", required=True, help="JSON/YAML config path or preset name")
    exp.add_argument("--out", default=None, help="output directory (overrides output_dir)")
    exp.add_argument("--threads", type=int, default=None,
                     help="parallel runs (overrides threads and TOMOQA_THREADS)")
    exp.add_argument("--digits-path", default=None, help="digits CSV (overrides digits_path)")
    _add_budget_options(exp, defaults=False)
    exp.set_defaults(handler=cmd_experiment)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (TomoqaError, ValidationError, OSError) as e:
        return _fail(str(e), EXIT_INVALID)


if __name__ == "__main__":
    sys.exit(main())
