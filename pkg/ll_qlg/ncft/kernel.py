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
import math
import typing

import numpy
import scipy.special

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.typed import ComplexArray, RealArray

__all__ = ("kernel", "radial_kernels", "KUMMER_SWITCH")

# Above this argument the alternating 1F1(1+n; 1+n-m; -z) series is evaluated
# through its terminating Kummer transform instead.
KUMMER_SWITCH: typing.Final = 2.0

_MINUS_I_POWERS: typing.Final = numpy.array([1.0, -1j, -1.0, 1j], dtype=numpy.complex128)


def radial_kernels(space: FockSpace, k: RealArray) -> ComplexArray:
    """Return ``f[n, m, j] = f_{n,m}(k[j], tau=0)`` for every pair of levels.

    The full kernel is ``f[n, m, j] * exp(i (m - n) tau)``.
    """
    k = numpy.atleast_1d(numpy.asarray(k, dtype=numpy.float64))

    if numpy.any(k <= 0):
        raise ValueError(f"Kernel wavenumbers must be positive, got minimum {float(numpy.min(k))!r}")

    levels = numpy.arange(space.dim)
    n = levels[:, None, None]
    m = levels[None, :, None]

    larger = numpy.maximum(n, m)
    smaller = numpy.minimum(n, m)
    offset = larger - smaller

    lam = space.lam
    z = (lam * k * k / 2.0)[None, None, :]
    scaled_k = (k * math.sqrt(lam / 2.0))[None, None, :]

    log_prefactor = (
        0.5 * (scipy.special.gammaln(larger + 1) - scipy.special.gammaln(smaller + 1))
        - scipy.special.gammaln(offset + 1)
        + offset * numpy.log(scaled_k)
    )

    direct = z <= KUMMER_SWITCH

    with numpy.errstate(over="ignore", under="ignore", invalid="ignore"):
        series_direct = scipy.special.hyp1f1(1 + larger, 1 + offset, -z)
        series_kummer = scipy.special.hyp1f1(-smaller, 1 + offset, z)

    exponent = numpy.where(direct, log_prefactor + z / 2.0, log_prefactor - z / 2.0)
    series = numpy.where(direct, series_direct, series_kummer)

    magnitude = lam * numpy.exp(exponent) * series
    return typing.cast(ComplexArray, magnitude * _MINUS_I_POWERS[offset % 4])


def kernel(space: FockSpace, n: int, m: int, k: float, tau: float) -> complex:
    if not (0 <= n < space.dim and 0 <= m < space.dim):
        raise ValueError(f"Levels ({n!r}, {m!r}) outside of [0, {space.dim})")

    if not k > 0:
        raise ValueError(f"Kernel wavenumber must be positive, got {k!r}")

    radial = complex(radial_kernels(space, numpy.array([k]))[n, m, 0])
    return radial * cmath.exp(1j * (m - n) * tau)
