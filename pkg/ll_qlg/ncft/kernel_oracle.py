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
import numpy.polynomial.legendre
import scipy.special

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.ncft.quadrature_convergence_error import QuadratureConvergenceError

__all__ = ("kernel_oracle",)

DEFAULT_POINTS: typing.Final = 400
DEFAULT_TOLERANCE: typing.Final = 1e-8


def _husimi_integral(space: FockSpace, n: int, m: int, k: float, tau: float, r_max: float, points: int) -> complex:
    lam = space.lam

    nodes, weights = numpy.polynomial.legendre.leggauss(points)
    radius = 0.5 * r_max * (nodes + 1.0)
    radial_weights = 0.5 * r_max * weights

    angle = 2.0 * math.pi * numpy.arange(points) / points
    angle_weight = 2.0 * math.pi / points

    log_norm = -0.5 * (scipy.special.gammaln(n + 1) + scipy.special.gammaln(m + 1))
    scaled_radius = radius / math.sqrt(2.0 * lam)
    radial_part = radius * numpy.exp(log_norm - radius * radius / (2.0 * lam)) * scaled_radius ** (n + m)

    r_mesh, theta_mesh = numpy.meshgrid(radius, angle, indexing="ij")
    oscillation = numpy.exp(1j * (m - n) * theta_mesh - 1j * k * r_mesh * numpy.cos(theta_mesh - tau))

    integral = numpy.sum(radial_weights[:, None] * radial_part[:, None] * oscillation) * angle_weight
    return complex(integral * math.exp(lam * k * k / 4.0) / (2.0 * math.pi))


def kernel_oracle(
        space: FockSpace,
        n: int,
        m: int,
        k: float,
        tau: float,
        *,
        points: int = DEFAULT_POINTS,
        r_max: float | None = None,
        tolerance: float = DEFAULT_TOLERANCE
) -> complex:
    """Kernel from the phase-space integral of the Husimi function of |n><m|.

    Slow reference for :func:`ll_qlg.ncft.kernel.kernel`. The error is
    estimated against a half-resolution evaluation of the same rule.
    """
    if not (0 <= n < space.dim and 0 <= m < space.dim):
        raise ValueError(f"Levels ({n!r}, {m!r}) outside of [0, {space.dim})")

    if not k > 0:
        raise ValueError(f"Kernel wavenumber must be positive, got {k!r}")

    if r_max is None:
        r_max = 6.0 * math.sqrt(space.lam * (max(n, m) + 1))

    full = _husimi_integral(space, n, m, k, tau, r_max, points)
    coarse = _husimi_integral(space, n, m, k, tau, r_max, points // 2)

    estimate = abs(full - coarse)
    logging.debug("husimi oracle (%d, %d, k=%s, tau=%s) error estimate %s", n, m, k, tau, estimate)

    if estimate > tolerance * max(1.0, abs(full)):
        raise QuadratureConvergenceError(estimate, tolerance)

    return full
