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


import typing

import numpy

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.typed import ComplexArray, frozen_array

__all__ = ("DensityState",)


class DensityState:
    __slots__ = ("space", "matrix")

    HERMITIAN_TOLERANCE: typing.Final = 1e-10
    TRACE_TOLERANCE: typing.Final = 1e-8
    POSITIVITY_TOLERANCE: typing.Final = 1e-8

    space: FockSpace
    matrix: ComplexArray

    def __init__(self, space: FockSpace, matrix: ComplexArray):
        matrix = numpy.asarray(matrix, dtype=numpy.complex128)

        if matrix.shape != (space.dim, space.dim):
            raise ValueError(f"Expected a {space.dim}x{space.dim} density matrix, found shape `{matrix.shape!r}`")

        asymmetry = float(numpy.max(numpy.abs(matrix - matrix.conj().T)))

        if asymmetry >= DensityState.HERMITIAN_TOLERANCE:
            raise ValueError(f"Density matrix is not hermitian (deviation {asymmetry:.3e})")

        trace = complex(numpy.trace(matrix))

        if abs(trace - 1.0) > DensityState.TRACE_TOLERANCE:
            raise ValueError(f"Density matrix trace {trace!r} deviates from 1")

        min_eigenvalue = float(numpy.linalg.eigvalsh(matrix)[0])

        if min_eigenvalue < -DensityState.POSITIVITY_TOLERANCE:
            raise ValueError(f"Density matrix has negative eigenvalue {min_eigenvalue:.3e}")

        self.space = space
        self.matrix = frozen_array(matrix)

    @staticmethod
    def from_pure(state: QuantumState) -> "DensityState":
        return DensityState(state.space, numpy.outer(state.amplitudes, state.amplitudes.conj()))

    def min_eigenvalue(self) -> float:
        return float(numpy.linalg.eigvalsh(self.matrix)[0])

    def mean_photon_number(self) -> float:
        return float(numpy.real(numpy.dot(numpy.arange(self.space.dim), numpy.diag(self.matrix))))

    def __repr__(self) -> str:
        return f"DensityState({self.space!r})"
