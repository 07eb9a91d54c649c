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

from ll_qlg.array_codec import check_constructor, encode_complex, decode_complex
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.typed import ComplexArray, JsonDict, frozen_array

__all__ = ("TargetUnitary", "unitarity_defect")


def unitarity_defect(matrix: ComplexArray) -> float:
    """max |U^dagger U - I|"""
    identity = numpy.eye(matrix.shape[0], dtype=numpy.complex128)
    return float(numpy.max(numpy.abs(matrix.conj().T @ matrix - identity)))


class TargetUnitary:
    __slots__ = ("space", "matrix")

    UNITARITY_TOLERANCE: typing.Final = 1e-10

    space: FockSpace
    matrix: ComplexArray

    def __init__(self, space: FockSpace, matrix: ComplexArray, *, tolerance: float = UNITARITY_TOLERANCE):
        matrix = numpy.asarray(matrix, dtype=numpy.complex128)

        if matrix.shape != (space.dim, space.dim):
            raise ValueError(f"Expected a {space.dim}x{space.dim} unitary, found shape `{matrix.shape!r}`")

        defect = unitarity_defect(matrix)

        if defect >= tolerance:
            raise ValueError(f"Matrix is not unitary (defect {defect:.3e}, tolerance {tolerance:.1e})")

        self.space = space
        self.matrix = frozen_array(matrix)

    def apply(self, state: QuantumState) -> QuantumState:
        self.space.check_same(state.space)
        return QuantumState(self.space, self.matrix @ state.amplitudes, norm_tolerance=1e-9)

    def get_dict(self) -> JsonDict:
        return {"_cons": "TargetUnitary", "space": self.space.get_dict(), "matrix": encode_complex(self.matrix)}

    @staticmethod
    def from_dict(data: JsonDict) -> "TargetUnitary":
        check_constructor(data, "TargetUnitary")
        return TargetUnitary(FockSpace.from_dict(data["space"]), decode_complex(data["matrix"]))

    def __repr__(self) -> str:
        return f"TargetUnitary({self.space!r})"
