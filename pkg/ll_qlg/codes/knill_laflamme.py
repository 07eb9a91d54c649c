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

from ll_qlg.codes.code_spec import CodeSpec
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.typed import RealArray, frozen_array

__all__ = ("KnillLaflammeReport", "kl_check")


class KnillLaflammeReport:
    """Deviations from <i|E_k^dagger E_l|j> = c_kl delta_ij for every error pair (k, l)."""

    __slots__ = ("diagonal", "off_diagonal")

    diagonal: RealArray
    off_diagonal: RealArray

    def __init__(self, diagonal: RealArray, off_diagonal: RealArray):
        self.diagonal = frozen_array(diagonal)
        self.off_diagonal = frozen_array(off_diagonal)

    @property
    def max_diagonal_deviation(self) -> float:
        return float(numpy.max(self.diagonal)) if self.diagonal.size else 0.0

    @property
    def max_off_diagonal_deviation(self) -> float:
        return float(numpy.max(self.off_diagonal)) if self.off_diagonal.size else 0.0

    def satisfied(self, tolerance: float) -> bool:
        return max(self.max_diagonal_deviation, self.max_off_diagonal_deviation) <= tolerance

    def __repr__(self) -> str:
        return f"KnillLaflammeReport(diagonal={self.max_diagonal_deviation:.3e}, off_diagonal={self.max_off_diagonal_deviation:.3e})"


def kl_check(code: CodeSpec, errors: typing.Sequence[OperatorMatrix]) -> KnillLaflammeReport:
    zero = code.zero_l.amplitudes
    one = code.one_l.amplitudes

    for error in errors:
        code.space.check_same(error.space)

    count = len(errors)
    diagonal = numpy.zeros((count, count), dtype=numpy.float64)
    off_diagonal = numpy.zeros((count, count), dtype=numpy.float64)

    for k, left in enumerate(errors):
        for l, right in enumerate(errors):
            product = left.matrix.conj().T @ right.matrix

            zero_zero = complex(numpy.vdot(zero, product @ zero))
            one_one = complex(numpy.vdot(one, product @ one))
            zero_one = complex(numpy.vdot(zero, product @ one))

            diagonal[k, l] = abs(zero_zero - one_one)
            off_diagonal[k, l] = abs(zero_one)

    return KnillLaflammeReport(diagonal, off_diagonal)
