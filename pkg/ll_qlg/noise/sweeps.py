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
import logging
import math
import traceback
import typing

import numpy

from ll_qlg.fock.density_state import DensityState
from ll_qlg.fock.fidelity import fidelity_density, fidelity_state
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.noise.amplitude_noise import noisy_sequence
from ll_qlg.noise.coherent_bound import coherent_bound
from ll_qlg.noise.lindblad import lindblad_evolve
from ll_qlg.noise.noise_config import NoiseConfig, SliceMode
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import apply_sequence
from ll_qlg.simulation_error import SimulationError
from ll_qlg.typed import parallel_map

__all__ = ("SweepRow", "sweep_kappa", "sweep_zeta", "sweep_csv_rows")


class SweepRow:
    """One sweep point. ``bound`` is the no-jump infidelity floor 1 - exp(-kappa * exposure) when known."""

    __slots__ = ("parameter", "mean_infidelity", "std", "n_samples", "failures", "bound")

    parameter: float
    mean_infidelity: float
    std: float
    n_samples: int
    failures: int
    bound: float | None

    def __init__(self, *, parameter: float, infidelities: typing.Sequence[float], failures: int = 0, bound: float | None = None):
        values = numpy.asarray(infidelities, dtype=numpy.float64)

        self.parameter = float(parameter)
        self.mean_infidelity = float(numpy.mean(values)) if values.size else math.nan
        self.std = float(numpy.std(values)) if values.size else math.nan
        self.n_samples = int(values.size)
        self.failures = int(failures)
        self.bound = bound

    def __repr__(self) -> str:
        return f"SweepRow({self.parameter!r}, mean_infidelity={self.mean_infidelity!r}, n_samples={self.n_samples})"


def sweep_csv_rows(rows: typing.Sequence[SweepRow], parameter_name: str) -> list[list[str]]:
    table = [[parameter_name, "mean_infidelity", "std", "n_samples", "bound", "failures"]]

    for row in rows:
        bound = "" if row.bound is None else repr(row.bound)
        table.append([repr(row.parameter), repr(row.mean_infidelity), repr(row.std), str(row.n_samples), bound, str(row.failures)])

    return table


def sweep_kappa(
        seq: GateSequence,
        psi0: QuantumState,
        target: QuantumState,
        kappas: typing.Sequence[float],
        *,
        dt_substeps: int = NoiseConfig.DEFAULT_SUBSTEPS,
        slice_mode: SliceMode = SliceMode.GATE_PRODUCT,
        executor: concurrent.futures.Executor | None = None
) -> list[SweepRow]:
    rho0 = DensityState.from_pure(psi0)

    def point(kappa: float) -> SweepRow:
        bound = 1.0 - coherent_bound(seq, psi0, kappa)

        try:
            rho = lindblad_evolve(seq, rho0, NoiseConfig(kappa=kappa, dt_substeps=dt_substeps, slice_mode=slice_mode))
        except SimulationError:
            logging.warning("kappa %s failed: %s", kappa, traceback.format_exc())
            return SweepRow(parameter=kappa, infidelities=[], failures=1, bound=bound)

        return SweepRow(parameter=kappa, infidelities=[1.0 - fidelity_density(rho, target)], bound=bound)

    return parallel_map(executor, point, kappas)


def sweep_zeta(
        pulse: DrivePulse,
        psi0: QuantumState,
        target: QuantumState,
        zetas: typing.Sequence[float],
        *,
        seeds: int,
        base_seed: int = 0,
        t: float = 2.0 * math.pi,
        executor: concurrent.futures.Executor | None = None
) -> list[SweepRow]:
    """Infidelity statistics under envelope noise; every point reuses the same seed list."""
    if seeds < 1:
        raise ValueError(f"At least one seed is required, got {seeds!r}")

    tasks = [(zeta, base_seed + offset) for zeta in zetas for offset in range(seeds)]

    def sample(task: tuple[float, int]) -> float | None:
        zeta, seed = task

        try:
            final = apply_sequence(noisy_sequence(pulse, NoiseConfig(zeta=zeta, seed=seed), t), psi0)
        except SimulationError:
            logging.warning("zeta %s seed %d failed: %s", zeta, seed, traceback.format_exc())
            return None

        return 1.0 - fidelity_state(final, target)

    outcomes = parallel_map(executor, sample, tasks)
    rows = []

    for index, zeta in enumerate(zetas):
        chunk = outcomes[index * seeds:(index + 1) * seeds]
        values = [value for value in chunk if value is not None]
        rows.append(SweepRow(parameter=zeta, infidelities=values, failures=len(chunk) - len(values)))

    return rows
