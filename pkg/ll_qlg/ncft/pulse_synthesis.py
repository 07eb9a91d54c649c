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


import math

import numpy

from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.fock.operators import plane_wave
from ll_qlg.ncft.drive_pulse import DrivePulse, principal_angle
from ll_qlg.ncft.ncft_kernel_table import NcftKernelTable, build_kernel_table, f_target
from ll_qlg.typed import ComplexArray

__all__ = ("synthesize_pulse", "reconstruct_operator")


def synthesize_pulse(
        h: OperatorMatrix,
        k_f: float,
        n_k: int,
        n_t: int,
        beta0: float,
        *,
        table: NcftKernelTable | None = None
) -> DrivePulse:
    if table is None:
        table = build_kernel_table(h.space, float(k_f), int(n_k), int(n_t))

    coefficients = f_target(h, table)
    amplitude = table.k_grid[:, None] * numpy.abs(coefficients)
    phase = principal_angle(numpy.angle(coefficients))

    return DrivePulse(
        space=h.space,
        k_grid=table.k_grid,
        tau_grid=table.tau_grid,
        amplitude=amplitude,
        phase=phase,
        envelope=numpy.full(table.tau_grid.size, float(beta0)),
        beta0=beta0
    )


def reconstruct_operator(coefficients: ComplexArray, table: NcftKernelTable) -> OperatorMatrix:
    """Resum sum over the grid of (dk dtau / 2 pi) k f(k, tau) exp(i k X_tau).

    Inverts :func:`f_target` up to the discretization error of the grid.
    """
    space = table.space
    coefficients = numpy.asarray(coefficients, dtype=numpy.complex128)

    if coefficients.shape != (table.k_grid.size, table.tau_grid.size):
        raise ValueError(f"Coefficient shape {coefficients.shape!r} does not match the kernel table grid")

    dk = float(table.k_grid[0])
    dtau = float(table.tau_grid[0])
    result = numpy.zeros((space.dim, space.dim), dtype=numpy.complex128)

    for i, k in enumerate(table.k_grid):
        for j, tau in enumerate(table.tau_grid):
            weight = dk * dtau / (2.0 * math.pi) * k * coefficients[i, j]
            result += weight * plane_wave(space, k * math.cos(tau), k * math.sin(tau)).matrix

    return OperatorMatrix(space, result)
