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
import logging
import math

import numpy

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.ncft.kernel import radial_kernels
from ll_qlg.typed import ComplexArray, RealArray, frozen_array

__all__ = ("NcftKernelTable", "build_kernel_table", "k_grid", "tau_grid", "f_target")


def k_grid(k_f: float, n_k: int) -> RealArray:
    """k_n = n k_f / N_k for n = 1..N_k; k = 0 is never sampled."""
    if not k_f > 0 or n_k < 1:
        raise ValueError(f"Invalid wavenumber grid k_f={k_f!r}, N_k={n_k!r}")

    return numpy.arange(1, n_k + 1, dtype=numpy.float64) * (k_f / n_k)


def tau_grid(n_t: int, period: float = 2.0 * math.pi) -> RealArray:
    """tau_m = m period / N_t for m = 1..N_t."""
    if n_t < 1:
        raise ValueError(f"Invalid time grid N_t={n_t!r}")

    return numpy.arange(1, n_t + 1, dtype=numpy.float64) * (period / n_t)


class NcftKernelTable:
    """Kernels f_{n,m}(k, tau) sampled on a (k, tau) grid.

    Only the tau independent factor is stored; the tau dependence is the
    exact phase exp(i (m - n) tau).
    """

    __slots__ = ("space", "k_grid", "tau_grid", "radial")

    space: FockSpace
    k_grid: RealArray
    tau_grid: RealArray
    radial: ComplexArray

    def __init__(self, space: FockSpace, k_values: RealArray, tau_values: RealArray):
        self.space = space
        self.k_grid = frozen_array(numpy.asarray(k_values, dtype=numpy.float64))
        self.tau_grid = frozen_array(numpy.asarray(tau_values, dtype=numpy.float64))
        self.radial = frozen_array(radial_kernels(space, self.k_grid))

        if not numpy.all(numpy.isfinite(self.radial)):
            raise ArithmeticError(f"Non-finite kernel values for {space!r}")

    @property
    def k_f(self) -> float:
        return float(self.k_grid[-1])

    def offset_phases(self) -> ComplexArray:
        """exp(i j tau) for offsets j = m - n in [-(dim - 1), dim - 1], shape (2 dim - 1, N_t)."""
        offsets = numpy.arange(-(self.space.dim - 1), self.space.dim)
        return numpy.exp(1j * offsets[:, None] * self.tau_grid[None, :])

    def kernels(self) -> ComplexArray:
        """Materialized 4-index array [n, m, k, tau]."""
        levels = numpy.arange(self.space.dim)
        offsets = levels[None, :] - levels[:, None]
        phases = numpy.exp(1j * offsets[:, :, None] * self.tau_grid[None, None, :])
        return self.radial[:, :, :, None] * phases[:, :, None, :]


@functools.lru_cache(maxsize=16)
def build_kernel_table(space: FockSpace, k_f: float, n_k: int, n_t: int) -> NcftKernelTable:
    logging.debug("building kernel table for %s with k_f=%s N_k=%d N_t=%d", space, k_f, n_k, n_t)
    return NcftKernelTable(space, k_grid(k_f, n_k), tau_grid(n_t))


def f_target(h: OperatorMatrix, table: NcftKernelTable) -> ComplexArray:
    """f_tar(k, tau) = sum_{n,m} h_{n,m} f_{n,m}(k, tau), shape (N_k, N_t)."""
    table.space.check_same(h.space)

    dim = table.space.dim
    weighted = h.matrix[:, :, None] * table.radial

    per_offset = numpy.stack(
        [numpy.diagonal(weighted, offset=offset, axis1=0, axis2=1).sum(axis=-1) for offset in range(-(dim - 1), dim)],
        axis=1
    )

    return per_offset @ table.offset_phases()
