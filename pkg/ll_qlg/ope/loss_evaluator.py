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
import typing

import numpy

from ll_qlg.ope.optimization_problem import OptimizationProblem
from ll_qlg.qlg.compiler import gate_weights
from ll_qlg.qlg.elementary_gate import cosine_eigensystem, free_rotation_phases
from ll_qlg.qlg.simulator import check_norm
from ll_qlg.typed import ComplexArray, RealArray, parallel_map

__all__ = ("LossEvaluator", "FD_RELATIVE_STEP")

FD_RELATIVE_STEP: typing.Final = 1e-6


class LossEvaluator:
    """Loss and finite-difference gradient of a fixed pulse over its envelope.

    The drive amplitude and phase do not depend on the envelope, so every
    gate's eigensystem is computed once and a change of beta only rescales
    the gate angles. A gradient sweep keeps the states entering every slice
    and the co-states leaving it, so each component recomputes one slice.
    """

    __slots__ = ("problem", "weights", "eigensystems", "rotation", "inputs", "outputs", "gate_count")

    problem: OptimizationProblem
    weights: RealArray
    eigensystems: list[list[tuple[RealArray, ComplexArray]]]
    rotation: ComplexArray
    inputs: ComplexArray
    outputs: ComplexArray
    gate_count: int

    def __init__(self, problem: OptimizationProblem):
        pulse = problem.pulse
        space = pulse.space

        self.problem = problem
        self.weights = gate_weights(pulse, problem.t) / space.lam
        self.eigensystems = [
            [cosine_eigensystem(space, float(pulse.phase[n, m]), float(pulse.k_grid[n])) for n in range(pulse.n_k)]
            for m in range(pulse.n_t)
        ]
        self.rotation = free_rotation_phases(space, pulse.n_t)
        self.inputs = problem.objective.inputs()
        self.outputs = problem.objective.outputs()
        self.gate_count = pulse.n_t * pulse.n_k

    def _apply_slice(self, index: int, beta: float, block: ComplexArray) -> ComplexArray:
        block = self.rotation[:, None] * block

        for weight, (eigenvalues, eigenvectors) in zip(self.weights[index], self.eigensystems[index]):
            phases = numpy.exp((-1j * beta * weight) * eigenvalues)
            block = eigenvectors @ (phases[:, None] * (eigenvectors.conj().T @ block))

        return block

    def _apply_slice_adjoint(self, index: int, beta: float, block: ComplexArray) -> ComplexArray:
        for weight, (eigenvalues, eigenvectors) in zip(reversed(self.weights[index]), reversed(self.eigensystems[index])):
            phases = numpy.exp((1j * beta * weight) * eigenvalues)
            block = eigenvectors @ (phases[:, None] * (eigenvectors.conj().T @ block))

        return self.rotation.conj()[:, None] * block

    def _loss_of_block(self, costate: ComplexArray, block: ComplexArray) -> float:
        return self.problem.objective.loss_from_overlap(costate.conj().T @ block)

    def _check_beta(self, beta: RealArray) -> RealArray:
        beta = numpy.asarray(beta, dtype=numpy.float64)

        if beta.shape != (self.problem.n_t,):
            raise ValueError(f"Expected an envelope of length {self.problem.n_t}, found shape {beta.shape!r}")

        return beta

    def loss(self, beta: RealArray) -> float:
        beta = self._check_beta(beta)
        block = self.inputs

        for index in range(beta.size):
            block = self._apply_slice(index, float(beta[index]), block)

        check_norm(block, self.gate_count)
        return self._loss_of_block(self.outputs, block)

    def loss_and_gradient(
            self,
            beta: RealArray,
            *,
            executor: concurrent.futures.Executor | None = None
    ) -> tuple[float, RealArray]:
        """Loss at ``beta`` and its slice-wise difference quotients.

        Each quotient uses the step FD_RELATIVE_STEP (1 + |beta_m|) on both
        sides, shortened on a side that would leave the box.
        """
        beta = self._check_beta(beta)
        lower, upper = self.problem.bounds()

        prefix = [self.inputs]

        for index in range(beta.size):
            prefix.append(self._apply_slice(index, float(beta[index]), prefix[-1]))

        check_norm(prefix[-1], self.gate_count)
        value = self._loss_of_block(self.outputs, prefix[-1])

        costates: list[ComplexArray] = [self.outputs] * beta.size
        costate = self.outputs

        for index in reversed(range(beta.size)):
            costates[index] = costate
            costate = self._apply_slice_adjoint(index, float(beta[index]), costate)

        def component(index: int) -> float:
            center = float(beta[index])
            step = FD_RELATIVE_STEP * (1.0 + abs(center))
            high = min(center + step, float(upper[index]))
            low = max(center - step, float(lower[index]))

            if high <= low:
                return 0.0

            loss_high = self._loss_of_block(costates[index], self._apply_slice(index, high, prefix[index]))
            loss_low = self._loss_of_block(costates[index], self._apply_slice(index, low, prefix[index]))
            return (loss_high - loss_low) / (high - low)

        gradient = numpy.asarray(parallel_map(executor, component, range(beta.size)), dtype=numpy.float64)
        return value, gradient
