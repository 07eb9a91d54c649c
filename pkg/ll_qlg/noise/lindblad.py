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


import logging
import math
import typing

import numpy
import scipy.linalg

from ll_qlg.fock.density_state import DensityState
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operators import ladder_ops, number_op
from ll_qlg.noise.noise_config import NoiseConfig, SliceMode
from ll_qlg.noise.trace_drift_error import TraceDriftError
from ll_qlg.qlg.elementary_gate import cosine_operator, free_rotation_phases
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import slice_operator
from ll_qlg.synth.principal_hamiltonian import principal_generator
from ll_qlg.typed import ComplexArray, RealArray

__all__ = ("TRACE_DRIFT_LIMIT", "slice_hamiltonian", "rotating_frame_phases", "lindblad_evolve")

TRACE_DRIFT_LIMIT: typing.Final = 1e-6


def slice_hamiltonian(seq: GateSequence, index: int, mode: SliceMode = SliceMode.GATE_PRODUCT) -> ComplexArray:
    """Constant lab-frame Hamiltonian acting during time slice ``index``.

    GATE_PRODUCT returns the principal generator of the slice's gate product
    over one slice duration, GATE_SUM the sum of (theta / dtau) cos(k x + gamma).
    """
    space = seq.space

    match mode:
        case SliceMode.GATE_PRODUCT:
            rotation = free_rotation_phases(space, seq.n_t)
            gates = slice_operator(seq, index) * rotation.conj()[None, :]
            generator, _, _ = principal_generator(gates, seq.dtau, space.lam)
            return generator

        case SliceMode.GATE_SUM:
            hamiltonian = numpy.zeros((space.dim, space.dim), dtype=numpy.complex128)

            for gate_index in seq.slice_gates(index):
                weight = float(seq.theta[gate_index]) / seq.dtau
                hamiltonian += weight * cosine_operator(space, float(seq.gamma[gate_index]), float(seq.k[gate_index]))

            return hamiltonian

        case _:
            raise ValueError(f"Unknown slice mode {mode!r}")


def rotating_frame_phases(space: FockSpace, n_t: int, steps: int) -> ComplexArray:
    """Diagonal of exp(+i n steps dtau), reduced modulo the drive period."""
    levels = numpy.arange(space.dim)
    return numpy.exp(2j * math.pi * ((levels * steps) % n_t) / n_t)


class _SliceIntegrator:
    __slots__ = ("energies", "vectors", "frequencies", "lowering", "number", "kappa", "lam")

    energies: RealArray
    vectors: ComplexArray
    frequencies: RealArray
    lowering: ComplexArray
    number: ComplexArray
    kappa: float
    lam: float

    def __init__(self, hamiltonian: ComplexArray, lowering: ComplexArray, number: ComplexArray, kappa: float, lam: float):
        self.energies, self.vectors = scipy.linalg.eigh(hamiltonian)
        self.frequencies = (self.energies[:, None] - self.energies[None, :]) / lam
        self.lowering = self.vectors.conj().T @ lowering @ self.vectors
        self.number = self.vectors.conj().T @ number @ self.vectors
        self.kappa = kappa
        self.lam = lam

    def _derivative(self, t: float, sigma: ComplexArray) -> ComplexArray:
        rotation = numpy.exp(1j * self.frequencies * t)
        lowering = self.lowering * rotation
        number = self.number * rotation
        jump = lowering @ sigma @ lowering.conj().T
        return self.kappa * (jump - 0.5 * (number @ sigma + sigma @ number))

    def evolve(self, rho: ComplexArray, duration: float, substeps: int) -> ComplexArray:
        # interaction picture of the slice Hamiltonian, only the dissipator is integrated numerically
        sigma = self.vectors.conj().T @ rho @ self.vectors

        if self.kappa > 0:
            h = duration / substeps

            for step in range(substeps):
                t = step * h
                k1 = self._derivative(t, sigma)
                k2 = self._derivative(t + 0.5 * h, sigma + 0.5 * h * k1)
                k3 = self._derivative(t + 0.5 * h, sigma + 0.5 * h * k2)
                k4 = self._derivative(t + h, sigma + h * k3)
                sigma = sigma + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

        sigma = sigma * numpy.exp(-1j * self.frequencies * duration)
        return self.vectors @ sigma @ self.vectors.conj().T


def lindblad_evolve(seq: GateSequence, rho0: DensityState, cfg: NoiseConfig) -> DensityState:
    """Integrate d rho / dt = -(i / lambda)[H(t), rho] + kappa D[a] rho over one drive period.

    H(t) is constant inside each time slice and is expressed in the frame
    co-rotating with the oscillator, the frame in which the gate fold is
    written. The frames coincide again after the full period, so the
    returned state compares directly with ``apply_sequence``.
    """
    space = seq.space
    space.check_same(rho0.space)

    lowering, _ = ladder_ops(space)
    number = number_op(space)
    rho = numpy.asarray(rho0.matrix).copy()

    for index in range(seq.n_t):
        frame = rotating_frame_phases(space, seq.n_t, index + 1)
        hamiltonian = slice_hamiltonian(seq, index, cfg.slice_mode)
        hamiltonian = frame[:, None] * hamiltonian * frame.conj()[None, :]

        integrator = _SliceIntegrator(hamiltonian, lowering.matrix, number.matrix, cfg.kappa, space.lam)
        rho = integrator.evolve(rho, seq.dtau, cfg.dt_substeps)
        rho = 0.5 * (rho + rho.conj().T)

        drift = abs(complex(numpy.trace(rho)) - 1.0)

        if drift > TRACE_DRIFT_LIMIT:
            raise TraceDriftError(drift, TRACE_DRIFT_LIMIT, index)

    logging.debug("lindblad evolution over %d slices with kappa %s", seq.n_t, cfg.kappa)
    return DensityState(space, rho)
