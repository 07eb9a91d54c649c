# Copyright (C) 2026 ll-qlg contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.

# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


import argparse
import concurrent.futures
import logging
import os
import sys
import traceback
import typing

from ll_qlg.cli.artifacts import dump_json
from ll_qlg.cli.commands import COMMAND_TABLE
from ll_qlg.cli.config_error import ConfigError
from ll_qlg.cli.run_config import RunConfig
from ll_qlg.codes.insufficient_dimension_error import InsufficientDimensionError
from ll_qlg.constants import VERSION
from ll_qlg.simulation_error import SimulationError

__all__ = ("main", "build_parser")

EXIT_OK: typing.Final = 0
EXIT_COMPUTATION: typing.Final = 1
EXIT_CONFIG: typing.Final = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> typing.NoReturn:
        raise ConfigError(None, message)


def _common_options() -> argparse.ArgumentParser:
    parser = _ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    parser.add_argument("--config", help="JSON config file, flags override its values")
    parser.add_argument("--out", help="run directory")
    parser.add_argument("--workers", type=int, help="worker threads, defaults to the number of logical cores")
    parser.add_argument("--log-level", dest="log_level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    parser.add_argument("--seed", type=int)
    parser.add_argument("--dim", type=int, help="Fock space dimension")
    parser.add_argument("--lambda", dest="lam", type=float, help="effective Planck constant")
    parser.add_argument("--Nt", dest="n_t", type=int, help="time slices")
    parser.add_argument("--Nk", dest="n_k", type=int, help="wavenumber slices")
    parser.add_argument("--kf", dest="k_f", type=float, help="wavenumber cutoff")
    parser.add_argument("--beta0", type=float, help="nominal drive envelope")
    parser.add_argument("--corrections", type=int, help="drive refinements against the folded unitary, 0 for the plain drive")
    return parser


def _code_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--code", choices=("binomial", "cat", "gkp"))
    parser.add_argument("--alpha", type=float, help="cat code amplitude")
    parser.add_argument("--sigma", type=float, help="GKP envelope width")
    parser.add_argument("--n-range", dest="n_range", type=int, help="GKP lattice range")


def _target_options(parser: argparse.ArgumentParser) -> None:
    _code_options(parser)
    parser.add_argument("--logical", type=int, choices=(0, 1), help="codeword to prepare")
    parser.add_argument("--target-file", dest="target_file", help="JSON file with target amplitudes")
    parser.add_argument("--haar-seed", dest="haar_seed", type=int, help="Haar-random target from this seed")
    parser.add_argument("--d", type=int, help="Haar subspace dimension")


def _optimizer_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--delta", type=float, help="envelope bound |beta - beta0| <= delta")
    parser.add_argument("--delta-relative", dest="delta_relative", action="store_true", help="read --delta as delta / beta0")
    parser.add_argument("--budget", type=int, help="maximum loss evaluations")
    parser.add_argument("--tol", type=float)
    parser.add_argument("--restarts", type=int, help="starting points, the first is beta0")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog="ll-qlg", description="Quantum lattice gate synthesis for a bosonic mode.", argument_default=argparse.SUPPRESS)
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    prepare = commands.add_parser("prepare", parents=[common], help="prepare a target state from the vacuum", argument_default=argparse.SUPPRESS)
    _target_options(prepare)

    optimize = commands.add_parser("optimize", parents=[common], help="optimize the drive envelope", argument_default=argparse.SUPPRESS)
    _target_options(optimize)
    _optimizer_options(optimize)
    optimize.add_argument("--gate", help="logical gate: H, S, T, X, Z or random-SU2(seed)")
    optimize.add_argument("--state-prep", dest="state_prep", action="store_true")
    optimize.add_argument("--random-gates", dest="random_gates", type=int, help="random SU(2) gates to sample")

    haar = commands.add_parser("haar", parents=[common], help="Haar-random state benchmark", argument_default=argparse.SUPPRESS)
    haar.add_argument("--d", type=int, help="Haar subspace dimension")
    haar.add_argument("--samples", type=int)
    haar.add_argument("--bins", type=int)
    haar.add_argument("--depths", help="comma separated N_t values, scanned until the mean fidelity passes --depth-threshold")
    haar.add_argument("--depth-threshold", dest="depth_threshold", type=float)

    noise = commands.add_parser("noise", parents=[common], help="photon loss and envelope noise sweeps", argument_default=argparse.SUPPRESS)
    _code_options(noise)
    _optimizer_options(noise)
    noise.add_argument("--logical", type=int, choices=(0, 1))
    noise.add_argument("--kappa-sweep", dest="kappa_sweep", help="a:b:N or a:b:logN")
    noise.add_argument("--zeta-sweep", dest="zeta_sweep", help="a:b:N or a:b:logN")
    noise.add_argument("--seeds", type=int, help="noise realizations per zeta")
    noise.add_argument("--dt-substeps", dest="dt_substeps", type=int)
    noise.add_argument("--slice-mode", dest="slice_mode", choices=("gate_product", "gate_sum"))
    noise.add_argument("--optimize-first", dest="optimize_first", action=argparse.BooleanOptionalAction, help="sweep the optimized envelope (default) or the plain one")

    codes = commands.add_parser("codes", help="bosonic code utilities")
    code_actions = codes.add_subparsers(dest="action", required=True, parser_class=_ArgumentParser)
    export = code_actions.add_parser("export", parents=[common], help="export codewords", argument_default=argparse.SUPPRESS)
    _code_options(export)

    return parser


def _report_error(kind: str, message: str, field: str | None = None) -> None:
    sys.stderr.write(dump_json({"error": kind, "field": field, "message": message}))


def _executor(workers: int | None) -> concurrent.futures.ThreadPoolExecutor | None:
    count = workers if workers is not None else (os.cpu_count() or 1)
    return concurrent.futures.ThreadPoolExecutor(max_workers=count) if count > 1 else None


def main(argv: typing.Sequence[str] | None = None) -> int:
    try:
        arguments = vars(build_parser().parse_args(argv))
        command = arguments.pop("command")

        if command == "codes":
            command = f"codes-{arguments.pop('action')}"

        logging.basicConfig(level=arguments.pop("log_level", "WARNING"), stream=sys.stderr)
        config = RunConfig.from_sources(command, arguments.pop("config", None), arguments)
    except ConfigError as error:
        _report_error(error.kind, error.message, error.field)
        return EXIT_CONFIG

    logging.debug("running %s", config)
    executor = _executor(config.workers)

    try:
        return COMMAND_TABLE[config.command](config, executor)
    except ConfigError as error:
        _report_error(error.kind, error.message, error.field)
        return EXIT_CONFIG
    except InsufficientDimensionError as error:
        _report_error("insufficient-dimension", str(error), "dim")
        return EXIT_CONFIG
    except (SimulationError, ArithmeticError, ValueError, OSError) as error:
        logging.debug("computation failed: %s", traceback.format_exc())
        _report_error("computation-failed", f"{type(error).__name__}: {error}")
        return EXIT_COMPUTATION
    finally:
        if executor is not None:
            executor.shutdown(wait=True)


if __name__ == "__main__":
    sys.exit(main())
