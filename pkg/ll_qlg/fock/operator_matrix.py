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
from ll_qlg.typed import ComplexArray, JsonDict, frozen_array

__all__ = ("OperatorMatrix",)


class OperatorMatrix:
    __slots__ = ("space", "matrix", "hermitian_flag")

    HERMITIAN_TOLERANCE: typing.Final = 1e-10

    space: FockSpace
    matrix: ComplexArray
    hermitian_flag: bool

    def __init__(self, space: FockSpace, matrix: ComplexArray, hermitian_flag: bool = False):
        matrix = numpy.asarray(matrix, dtype=numpy.complex128)

        if matrix.shape != (space.dim, space.dim):
            raise ValueError(f"Expected a {space.dim}x{space.dim} matrix, found shape `{matrix.shape!r}`")

        if hermitian_flag:
            asymmetry = float(numpy.max(numpy.abs(matrix - matrix.conj().T)))

            if asymmetry >= OperatorMatrix.HERMITIAN_TOLERANCE:
                raise ValueError(f"Operator flagged hermitian deviates from its adjoint by {asymmetry:.3e}")

        self.space = space
        self.matrix = frozen_array(matrix)
        self.hermitian_flag = hermitian_flag

    def dagger(self) -> "OperatorMatrix":
        return OperatorMatrix(self.space, self.matrix.conj().T, self.hermitian_flag)

    def scaled(self, factor: float) -> "OperatorMatrix":
        return OperatorMatrix(self.space, self.matrix * factor, self.hermitian_flag)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self.space.check_same(other.space)
        return OperatorMatrix(self.space, self.matrix + other.matrix, self.hermitian_flag and other.hermitian_flag)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self.space.check_same(other.space)
        return OperatorMatrix(self.space, self.matrix @ other.matrix)

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "OperatorMatrix",
            "space": self.space.get_dict(),
            "matrix": encode_complex(self.matrix),
            "hermitian": self.hermitian_flag
        }

    @staticmethod
    def from_dict(data: JsonDict) -> "OperatorMatrix":
        check_constructor(data, "OperatorMatrix")
        return OperatorMatrix(FockSpace.from_dict(data["space"]), decode_complex(data["matrix"]), bool(data["hermitian"]))

    def __repr__(self) -> str:
        return f"OperatorMatrix({self.space!r}, hermitian_flag={self.hermitian_flag})"
