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
import typing

import numpy

from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.qlg.elementary_gate import elementary_gate, free_rotation_phases
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.norm_drift_error import NormDriftError
from ll_qlg.synth.target_unitary import TargetUnitary
from ll_qlg.typed import ComplexArray

__all__ = (
    "NORM_DRIFT_PER_KILOGATE",
    "norm_threshold",
    "check_norm",
    "propagate",
    "apply_sequence",
    "sequence_unitary",
    "slice_operator",
    "slice_states",
)

NORM_DRIFT_PER_KILOGATE: typing.Final = 1e-8


def norm_threshold(gate_count: int) -> float:
    return NORM_DRIFT_PER_KILOGATE * max(1.0, gate_count / 1000.0)


def _apply_slice(seq: GateSequence, index: int, rotation: ComplexArray, block: ComplexArray) -> ComplexArray:
    """Rotation followed by the slice's gates, applied to a vector or to matrix columns."""
    if block.ndim == 1:
        block = rotation * block
    else:
        block = rotation[:, None] * block

    for gate_index in seq.slice_gates(index):
        gate = elementary_gate(seq.space, float(seq.theta[gate_index]), float(seq.gamma[gate_index]), float(seq.k[gate_index]))
        block = gate.matrix @ block

    return block


def slice_operator(seq: GateSequence, index: int) -> ComplexArray:
    """Matrix of time slice ``index``: its gates after one free rotation step."""
    if not 0 <= index < seq.n_t:
        raise ValueError(f"Slice index {index!r} outside of [0, {seq.n_t})")

    rotation = free_rotation_phases(seq.space, seq.n_t)
    return _apply_slice(seq, index, rotation, numpy.eye(seq.space.dim, dtype=numpy.complex128))


def slice_states(seq: GateSequence, psi0: QuantumState) -> list[ComplexArray]:
    """State vectors at every slice boundary, starting with ``psi0``."""
    seq.space.check_same(psi0.space)
    states = [numpy.asarray(psi0.amplitudes).copy()]

    if seq.n_t == 0:
        return states

    rotation = free_rotation_phases(seq.space, seq.n_t)

    for index in range(seq.n_t):
        states.append(_apply_slice(seq, index, rotation, states[-1]))

    return states


def check_norm(block: ComplexArray, gate_count: int) -> None:
    """Raise NormDriftError when any column of ``block`` left the unit sphere."""
    norms = numpy.linalg.norm(block, axis=0)
    drift = float(numpy.max(numpy.abs(norms - 1.0)))
    threshold = norm_threshold(gate_count)

    if drift > threshold:
        raise NormDriftError(drift, threshold, gate_count)


def apply_sequence(seq: GateSequence, psi0: QuantumState) -> QuantumState:
    final = slice_states(seq, psi0)[-1]
    check_norm(final, len(seq))

    logging.debug("applied %d gates over %d slices", len(seq), seq.n_t)
    return QuantumState(seq.space, final, norm_tolerance=norm_threshold(len(seq)))


def propagate(seq: GateSequence, block: ComplexArray) -> ComplexArray:
    """Fold the sequence over the columns of ``block``."""
    if block.shape[0] != seq.space.dim:
        raise ValueError(f"Expected {seq.space.dim} rows, found shape `{block.shape!r}`")

    if seq.n_t > 0:
        rotation = free_rotation_phases(seq.space, seq.n_t)

        for index in range(seq.n_t):
            block = _apply_slice(seq, index, rotation, block)

    check_norm(block, len(seq))
    return block


def sequence_unitary(seq: GateSequence) -> TargetUnitary:
    product = propagate(seq, numpy.eye(seq.space.dim, dtype=numpy.complex128))
    threshold = norm_threshold(len(seq))
    return TargetUnitary(seq.space, product, tolerance=max(TargetUnitary.UNITARITY_TOLERANCE, threshold))
