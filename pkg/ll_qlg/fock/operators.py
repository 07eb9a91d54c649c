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


import functools
import math

import numpy
import scipy.special

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.typed import ComplexArray

__all__ = (
    "ladder_ops",
    "number_op",
    "quadratures",
    "displacement",
    "plane_wave",
    "displacement_elements",
    "plane_wave_alpha",
)


def _annihilation_matrix(levels: int) -> ComplexArray:
    return numpy.diag(numpy.sqrt(numpy.arange(1, levels, dtype=numpy.float64)), k=1).astype(numpy.complex128)


def ladder_ops(space: FockSpace) -> tuple[OperatorMatrix, OperatorMatrix]:
    annihilation = _annihilation_matrix(space.dim)
    return OperatorMatrix(space, annihilation), OperatorMatrix(space, annihilation.T.copy())


def number_op(space: FockSpace) -> OperatorMatrix:
    return OperatorMatrix(space, numpy.diag(numpy.arange(space.dim, dtype=numpy.complex128)), hermitian_flag=True)


def quadratures(space: FockSpace) -> tuple[OperatorMatrix, OperatorMatrix]:
    annihilation = _annihilation_matrix(space.dim)
    creation = annihilation.T
    scale = math.sqrt(space.lam / 2.0)

    x = scale * (creation + annihilation)
    p = 1j * scale * (creation - annihilation)

    return OperatorMatrix(space, x, hermitian_flag=True), OperatorMatrix(space, p, hermitian_flag=True)


def displacement_elements(levels: int, alpha: complex) -> ComplexArray:
    """Matrix elements <m|D(alpha)|n> for 0 <= m, n < levels.

    Uses the closed form with associated Laguerre polynomials; the
    factorial ratio, the power of |alpha| and the Gaussian factor are
    combined in log space so large displacements neither overflow nor
    underflow before the polynomial is applied.
    """
    if alpha == 0:
        return numpy.eye(levels, dtype=numpy.complex128)

    rows, cols = numpy.meshgrid(numpy.arange(levels), numpy.arange(levels), indexing="ij")
    lower = numpy.minimum(rows, cols)
    offset = numpy.abs(rows - cols)

    modulus = abs(alpha)
    x = modulus * modulus

    log_scale = (
        0.5 * (scipy.special.gammaln(lower + 1) - scipy.special.gammaln(lower + offset + 1))
        + offset * math.log(modulus)
        - 0.5 * x
    )

    laguerre = scipy.special.eval_genlaguerre(lower, offset, x)

    unit = alpha / modulus
    phase = numpy.where(rows >= cols, unit ** offset, (-unit.conjugate()) ** offset)

    return numpy.exp(log_scale) * laguerre * phase


@functools.lru_cache(maxsize=4096)
def _truncated_displacement(space: FockSpace, alpha: complex) -> OperatorMatrix:
    padded = displacement_elements(space.padded_dim, alpha)
    return OperatorMatrix(space, padded[:space.dim, :space.dim])


def displacement(space: FockSpace, alpha: complex) -> OperatorMatrix:
    return _truncated_displacement(space, complex(alpha))


def plane_wave_alpha(space: FockSpace, kx: float, kp: float) -> complex:
    """exp(i(kx x + kp p)) = D(alpha) with alpha = i sqrt(lambda / 2) (kx + i kp)."""
    return 1j * math.sqrt(space.lam / 2.0) * complex(kx, kp)


def plane_wave(space: FockSpace, kx: float, kp: float) -> OperatorMatrix:
    return displacement(space, plane_wave_alpha(space, kx, kp))
