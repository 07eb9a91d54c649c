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

from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.ncft.ncft_kernel_table import NcftKernelTable
from ll_qlg.ncft.pulse_synthesis import synthesize_pulse
from ll_qlg.qlg.compiler import compile_pulse
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import propagate
from ll_qlg.synth.principal_hamiltonian import matched_generator
from ll_qlg.typed import ComplexArray

__all__ = ("FLOQUET_CORRECTIONS", "CorrectedDrive", "corrected_drive")

FLOQUET_CORRECTIONS: typing.Final = 4


class CorrectedDrive:
    __slots__ = ("pulse", "sequence", "loss", "iterations", "losses")

    pulse: DrivePulse
    sequence: GateSequence
    loss: float
    iterations: int
    losses: tuple[float, ...]

    def __init__(self, *, pulse: DrivePulse, sequence: GateSequence, loss: float, iterations: int, losses: typing.Sequence[float]):
        self.pulse = pulse
        self.sequence = sequence
        self.loss = loss
        self.iterations = iterations
        self.losses = tuple(losses)

    def __repr__(self) -> str:
        return f"CorrectedDrive({self.sequence!r}, loss={self.loss!r}, iterations={self.iterations})"


def corrected_drive(
        hamiltonian: OperatorMatrix,
        loss: typing.Callable[[ComplexArray], float],
        *,
        k_f: float,
        n_k: int,
        n_t: int,
        beta0: float = 1.0,
        t: float = 2.0 * math.pi,
        table: NcftKernelTable | None = None,
        corrections: int = FLOQUET_CORRECTIONS
) -> CorrectedDrive:
    """Synthesize a drive whose folded sequence realizes exp(-i beta0 H t / lambda).

    The first drive is the plain synthesis of ``hamiltonian``. Each correction
    folds the current sequence into a unitary, takes its generator on the
    branch of the synthesized operator and moves the synthesized operator by
    the mismatch, which removes higher-order Floquet and grid errors to the
    extent they vary slowly with the drive. ``loss`` scores a folded unitary;
    iteration stops at the first step that does not lower it and the best
    drive is returned.
    """
    if corrections < 0:
        raise ValueError(f"Correction count must be non-negative, got {corrections!r}")

    space = hamiltonian.space
    goal = beta0 * numpy.asarray(hamiltonian.matrix)
    current = numpy.asarray(hamiltonian.matrix)
    identity = numpy.eye(space.dim, dtype=numpy.complex128)

    best: CorrectedDrive | None = None
    losses: list[float] = []

    for iteration in range(corrections + 1):
        pulse = synthesize_pulse(OperatorMatrix(space, current, hermitian_flag=True), k_f, n_k, n_t, beta0, table=table)
        sequence = compile_pulse(pulse, t)

        if corrections == 0:
            return CorrectedDrive(pulse=pulse, sequence=sequence, loss=math.nan, iterations=0, losses=())

        realized = propagate(sequence, identity)
        value = float(loss(realized))
        losses.append(value)

        logging.debug("floquet correction %d loss %s", iteration, value)

        if best is not None and not value < best.loss:
            break

        best = CorrectedDrive(pulse=pulse, sequence=sequence, loss=value, iterations=iteration, losses=losses)

        if iteration == corrections or beta0 == 0:
            break

        effective = matched_generator(realized, beta0 * current, t, space.lam)
        current = current + (goal - effective) / beta0

    best.losses = tuple(losses)
    logging.info("floquet corrections kept iteration %d with loss %s", best.iterations, best.loss)
    return best
