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


import numpy

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operators import displacement_elements
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.typed import ComplexArray

__all__ = ("fock_state", "vacuum", "coherent_amplitudes", "coherent_state")


def fock_state(space: FockSpace, n: int) -> QuantumState:
    if not 0 <= n < space.dim:
        raise ValueError(f"Fock level {n!r} outside of [0, {space.dim})")

    amplitudes = numpy.zeros(space.dim, dtype=numpy.complex128)
    amplitudes[n] = 1.0
    return QuantumState(space, amplitudes)


def vacuum(space: FockSpace) -> QuantumState:
    return fock_state(space, 0)


def coherent_amplitudes(space: FockSpace, alpha: complex) -> ComplexArray:
    """D(alpha)|0> computed in the padded space, truncated, not renormalized."""
    return displacement_elements(space.padded_dim, complex(alpha))[:space.dim, 0].copy()


def coherent_state(space: FockSpace, alpha: complex) -> QuantumState:
    return QuantumState.from_amplitudes(space, coherent_amplitudes(space, alpha), normalize=True)
