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


import cmath
import logging
import typing

import numpy

from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.synth.target_unitary import TargetUnitary

__all__ = ("householder_unitary",)

_NORM_TOLERANCE: typing.Final = 1e-10
_COLLINEAR_TOLERANCE: typing.Final = 1e-12


def householder_unitary(psi0: QuantumState, psi_tar: QuantumState) -> TargetUnitary:
    """Unitary mapping ``psi0`` onto ``psi_tar``.

    A Householder reflection first takes ``psi0`` to ``psi_tar`` up to the
    phase of their overlap; a rank-one phase gate on ``psi_tar`` removes
    that phase. Vectors orthogonal to both states are left untouched.
    """
    psi0.space.check_same(psi_tar.space)

    source = numpy.asarray(psi0.amplitudes)
    target = numpy.asarray(psi_tar.amplitudes)

    for name, vector in (("psi0", source), ("psi_tar", target)):
        norm = float(numpy.linalg.norm(vector))

        if abs(norm - 1.0) > _NORM_TOLERANCE:
            raise ValueError(f"{name} is not normalized (norm {norm!r})")

    overlap = complex(numpy.vdot(target, source))
    phase = cmath.exp(1j * cmath.phase(overlap)) if abs(overlap) > 0.0 else 1.0 + 0.0j

    dim = psi0.space.dim
    identity = numpy.eye(dim, dtype=numpy.complex128)
    phase_gate = identity + (phase.conjugate() - 1.0) * numpy.outer(target, target.conj())

    difference = source - phase * target
    distance = float(numpy.linalg.norm(difference))

    if distance < _COLLINEAR_TOLERANCE:
        logging.debug("householder synthesis with collinear states, overlap phase %s", phase)
        return TargetUnitary(psi0.space, phase_gate)

    u = difference / distance
    reflection = identity - 2.0 * numpy.outer(u, u.conj())

    return TargetUnitary(psi0.space, phase_gate @ reflection)
