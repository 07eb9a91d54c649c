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


import concurrent.futures
import json
import logging
import os
import typing

import numpy

from ll_qlg.array_codec import decode_complex
from ll_qlg.cli.artifacts import RunDirectory
from ll_qlg.cli.config_error import ConfigError
from ll_qlg.cli.run_config import RunConfig, depth_values, sweep_values
from ll_qlg.codes.code_spec import CodeSpec
from ll_qlg.codes.codewords import code_by_name
from ll_qlg.codes.knill_laflamme import kl_check
from ll_qlg.fock.fidelity import fidelity_state
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.fock.operators import ladder_ops
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.fock.states import vacuum
from ll_qlg.fock.wigner import wigner_grid
from ll_qlg.haar.benchmark import benchmark, depth_scan
from ll_qlg.haar.sampling import sample_haar_state
from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.ncft.ncft_kernel_table import build_kernel_table
from ll_qlg.noise.noise_config import SliceMode
from ll_qlg.noise.sweeps import sweep_csv_rows, sweep_kappa, sweep_zeta
from ll_qlg.ope.objectives import GatePreparation, ObjectiveBase, StatePreparation
from ll_qlg.ope.optimization_problem import OptimizationProblem
from ll_qlg.ope.optimization_result import OptimizationResult
from ll_qlg.ope.optimizer import optimize
from ll_qlg.preparation import prepare_gate, prepare_state
from ll_qlg.qlg.compiler import compile_pulse
from ll_qlg.synth.logical_gates import logical_gate, random_su2
from ll_qlg.typed import JsonDict, parallel_map

__all__ = ("cmd_prepare", "cmd_optimize", "cmd_haar", "cmd_noise", "cmd_codes_export", "load_target_file")

_Executor = concurrent.futures.Executor | None


def load_target_file(path: str, space: FockSpace) -> QuantumState:
    """Target amplitudes from a QuantumState JSON or ``{"amplitudes": [...]}``.

    Amplitudes are numbers or ``[re, im]`` pairs; shorter vectors are padded
    with zeros and the result is normalized.
    """
    if not os.path.isfile(path):
        raise ConfigError("target_file", f"`{path}` does not exist", ConfigError.TARGET_NOT_FOUND)

    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as error:
        raise ConfigError("target_file", f"cannot read `{path}`: {error}") from error

    if isinstance(data, dict) and data.get("_cons") == "QuantumState":
        state = QuantumState.from_dict(data)

        if state.space.dim != space.dim:
            raise ConfigError("target_file", f"target has dimension {state.space.dim}, run uses {space.dim}")

        return QuantumState(space, state.amplitudes)

    if not isinstance(data, dict) or not isinstance(data.get("amplitudes"), list):
        raise ConfigError("target_file", "expected a QuantumState object or an `amplitudes` list")

    raw = data["amplitudes"]

    try:
        if raw and isinstance(raw[0], list):
            amplitudes = decode_complex(raw)
        else:
            amplitudes = decode_complex([[float(value), 0.0] for value in raw])
    except (TypeError, ValueError) as error:
        raise ConfigError("target_file", f"malformed amplitudes: {error}") from error

    if amplitudes.ndim != 1 or not 0 < amplitudes.size <= space.dim:
        raise ConfigError("target_file", f"expected between 1 and {space.dim} amplitudes, found {amplitudes.size}")

    padded = [complex(value) for value in amplitudes] + [0j] * (space.dim - amplitudes.size)

    try:
        return QuantumState.from_amplitudes(space, padded, normalize=True)
    except ValueError as error:
        raise ConfigError("target_file", str(error)) from error


def _space(config: RunConfig) -> FockSpace:
    return FockSpace(config.dim, config.lam)


def _code(config: RunConfig, space: FockSpace) -> CodeSpec:
    assert config.code is not None
    return code_by_name(config.code, space, alpha=config.alpha, sigma=config.sigma, n_range=config.n_range)


def _resolve_target(config: RunConfig, space: FockSpace) -> tuple[QuantumState, str]:
    if config.target_file is not None:
        return load_target_file(config.target_file, space), f"file:{config.target_file}"

    if config.haar_seed is not None:
        d = config.d if config.d is not None else space.dim
        return sample_haar_state(d, config.haar_seed, space=space), f"haar:{config.haar_seed}"

    return _code(config, space).codeword(config.logical), f"{config.code}:{config.logical}"


def _write_state_artifacts(run_dir: RunDirectory, prefix: str, state: QuantumState) -> None:
    grid = wigner_grid(state)
    run_dir.write_csv(f"{prefix}_wigner.csv", grid.csv_rows())
    run_dir.write_json(f"{prefix}_wigner.json", grid.metadata())


def cmd_prepare(config: RunConfig, executor: _Executor = None) -> int:
    space = _space(config)
    target, description = _resolve_target(config, space)
    run_dir = RunDirectory(config.out, config)

    run = prepare_state(vacuum(space), target, n_t=config.n_t, n_k=config.n_k, k_f=config.k_f, beta0=config.beta0, corrections=config.corrections)

    run_dir.write_json("summary.json", {
        "target": description,
        "dim": space.dim,
        "lambda": space.lam,
        "N_t": config.n_t,
        "N_k": config.n_k,
        "k_f": config.k_f,
        "beta0": config.beta0,
        "corrections": config.corrections,
        "gates": len(run.sequence),
        "fidelity": run.fidelity,
        "infidelity": run.infidelity,
        "near_branch_cut": run.hamiltonian.near_branch_cut
    })

    _write_state_artifacts(run_dir, "final", run.final_state)
    run_dir.write_csv("pulse.csv", run.pulse.csv_rows())
    run_dir.write_json("sequence.json", run.sequence.get_dict())
    run_dir.finish()
    return 0


def _run_optimization(config: RunConfig, objective: ObjectiveBase, pulse: DrivePulse, executor: _Executor) -> OptimizationResult:
    problem = OptimizationProblem(
        objective=objective,
        pulse=pulse,
        delta=config.effective_delta,
        budget=config.budget,
        tol=config.tol,
        restarts=config.restarts,
        seed=config.seed
    )

    return optimize(problem, executor=executor)


def _random_gate_rows(config: RunConfig, code: CodeSpec, executor: _Executor) -> list[list[str]]:
    table = build_kernel_table(code.space, config.k_f, config.n_k, config.n_t)

    def sample(index: int) -> list[str]:
        seed = config.seed + index
        run = prepare_gate(code, random_su2(seed), n_t=config.n_t, n_k=config.n_k, k_f=config.k_f, beta0=config.beta0, table=table, corrections=config.corrections)
        result = _run_optimization(config, GatePreparation(run.logical_gate, code.embedding), run.pulse, None)
        return [str(index), str(seed), repr(run.gate_error), repr(result.final_loss)]

    rows = [["index", "seed", "baseline_infidelity", "optimized_infidelity"]]
    rows.extend(parallel_map(executor, sample, range(config.random_gates)))
    return rows


def cmd_optimize(config: RunConfig, executor: _Executor = None) -> int:
    space = _space(config)
    summary: JsonDict = {"dim": space.dim, "N_t": config.n_t, "N_k": config.n_k, "k_f": config.k_f, "beta0": config.beta0, "delta": config.effective_delta}

    objective: ObjectiveBase
    target: QuantumState | None = None

    if config.gate is None and config.random_gates == 0:
        target, description = _resolve_target(config, space)
        run_dir = RunDirectory(config.out, config)
        psi0 = vacuum(space)
        pulse = prepare_state(psi0, target, n_t=config.n_t, n_k=config.n_k, k_f=config.k_f, beta0=config.beta0, corrections=config.corrections).pulse
        objective = StatePreparation(psi0, target)
        summary["target"] = description
    else:
        code = _code(config, space)
        run_dir = RunDirectory(config.out, config)
        summary["code"] = str(code)

        if config.random_gates > 0:
            run_dir.write_csv("random_gates.csv", _random_gate_rows(config, code, executor))

        if config.gate is None:
            run_dir.write_json("summary.json", summary)
            run_dir.finish()
            return 0

        gate_run = prepare_gate(code, logical_gate(config.gate, config.seed), n_t=config.n_t, n_k=config.n_k, k_f=config.k_f, beta0=config.beta0, corrections=config.corrections)
        pulse = gate_run.pulse
        objective = GatePreparation(gate_run.logical_gate, code.embedding)
        summary["gate"] = config.gate

    result = _run_optimization(config, objective, pulse, executor)
    optimized_pulse = pulse.with_envelope(result.beta_opt)

    summary.update({"baseline_loss": result.baseline_loss, "final_loss": result.final_loss, "converged": result.converged})
    run_dir.write_json("summary.json", summary)
    run_dir.write_json("result.json", result.get_dict())
    run_dir.write_csv("loss_trace.csv", result.trace_csv_rows())
    run_dir.write_csv("pulse.csv", optimized_pulse.csv_rows())
    run_dir.write_json("sequence.json", compile_pulse(optimized_pulse).get_dict())
    run_dir.finish()
    return 0


def cmd_haar(config: RunConfig, executor: _Executor = None) -> int:
    d = config.d if config.d is not None else 4
    run_dir = RunDirectory(config.out, config)

    if config.depths is not None:
        scan = depth_scan(
            d,
            depth_values(config.depths),
            n_k=config.n_k,
            k_f=config.k_f,
            samples=config.samples,
            seed=config.seed,
            threshold=config.depth_threshold,
            beta0=config.beta0,
            lam=config.lam,
            corrections=config.corrections,
            executor=executor
        )

        run_dir.write_json("depth_scan.json", scan.get_dict())
        run_dir.write_csv("depth_scan.csv", scan.csv_rows())
        run_dir.finish()
        return 0

    report = benchmark(d, config.n_t, config.n_k, config.k_f, config.samples, config.seed, beta0=config.beta0, lam=config.lam, corrections=config.corrections, bins=config.bins, executor=executor)

    run_dir.write_json("report.json", report.get_dict())
    run_dir.write_csv("histogram.csv", report.histogram_csv_rows())
    run_dir.finish()
    return 0


def cmd_noise(config: RunConfig, executor: _Executor = None) -> int:
    """Noise sweeps on the preparation of a codeword (binomial |0_L> unless told otherwise).

    With ``optimize_first`` the optimized envelope is swept and the plain
    drive goes to the ``*_plain.csv`` files next to it.
    """
    space = _space(config)
    code = code_by_name(config.code or "binomial", space, alpha=config.alpha, sigma=config.sigma, n_range=config.n_range)
    target = code.codeword(config.logical)
    psi0 = vacuum(space)
    run_dir = RunDirectory(config.out, config)

    plain = prepare_state(psi0, target, n_t=config.n_t, n_k=config.n_k, k_f=config.k_f, beta0=config.beta0, corrections=config.corrections).pulse
    pulses = {"": plain}

    if config.optimize_first:
        result = _run_optimization(config, StatePreparation(psi0, target), plain, executor)
        pulses = {"": plain.with_envelope(result.beta_opt), "_plain": plain}
        logging.info("noise sweep uses optimized envelope with loss %s", result.final_loss)

    for suffix, pulse in pulses.items():
        if config.kappa_sweep is not None:
            rows = sweep_kappa(
                compile_pulse(pulse),
                psi0,
                target,
                list(sweep_values(config.kappa_sweep, "kappa_sweep")),
                dt_substeps=config.dt_substeps,
                slice_mode=SliceMode(config.slice_mode),
                executor=executor
            )
            run_dir.write_csv(f"kappa_sweep{suffix}.csv", sweep_csv_rows(rows, "kappa"))

        if config.zeta_sweep is not None:
            rows = sweep_zeta(pulse, psi0, target, list(sweep_values(config.zeta_sweep, "zeta_sweep")), seeds=config.seeds, base_seed=config.seed, executor=executor)
            run_dir.write_csv(f"zeta_sweep{suffix}.csv", sweep_csv_rows(rows, "zeta"))

    run_dir.finish()
    return 0


def cmd_codes_export(config: RunConfig, executor: _Executor = None) -> int:
    space = _space(config)
    code = _code(config, space)
    run_dir = RunDirectory(config.out, config)

    lowering, _ = ladder_ops(space)
    identity = OperatorMatrix(space, numpy.eye(space.dim), hermitian_flag=True)
    report = kl_check(code, [identity, lowering])

    run_dir.write_json("code.json", {
        "kind": code.kind.value,
        "params": code.params,
        "zero": code.zero_l.get_dict(),
        "one": code.one_l.get_dict(),
        "codeword_overlap": code.codeword_overlap(),
        "mean_photon_numbers": list(code.mean_photon_numbers()),
        "kl_max_diagonal_deviation": report.max_diagonal_deviation,
        "kl_max_off_diagonal_deviation": report.max_off_diagonal_deviation,
        "fidelity_zero_one": fidelity_state(code.zero_l, code.one_l)
    })

    _write_state_artifacts(run_dir, "zero", code.zero_l)
    _write_state_artifacts(run_dir, "one", code.one_l)
    run_dir.finish()
    return 0


COMMAND_TABLE: typing.Final[dict[str, typing.Callable[[RunConfig, _Executor], int]]] = {
    "prepare": cmd_prepare,
    "optimize": cmd_optimize,
    "haar": cmd_haar,
    "noise": cmd_noise,
    "codes-export": cmd_codes_export,
}
