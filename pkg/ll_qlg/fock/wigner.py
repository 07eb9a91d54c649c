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
import typing

import numpy
import scipy.integrate

from ll_qlg.fock.density_state import DensityState
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.typed import ComplexArray, RealArray, JsonDict, frozen_array

__all__ = ("PhaseSpaceGrid", "WignerGrid", "wigner", "wigner_grid")


class PhaseSpaceGrid:
    __slots__ = ("x", "p")

    DEFAULT_POINTS: typing.Final = 201
    DEFAULT_EXTENT: typing.Final = 5.0

    x: RealArray
    p: RealArray

    def __init__(self, x: RealArray, p: RealArray):
        x = numpy.asarray(x, dtype=numpy.float64)
        p = numpy.asarray(p, dtype=numpy.float64)

        if x.ndim != 1 or p.ndim != 1 or x.size < 2 or p.size < 2:
            raise ValueError("Phase-space axes must be one dimensional with at least two points")

        if not (numpy.all(numpy.isfinite(x)) and numpy.all(numpy.isfinite(p))):
            raise ValueError("Phase-space axes must be finite")

        self.x = frozen_array(x)
        self.p = frozen_array(p)

    @staticmethod
    def default(space: FockSpace, points: int = DEFAULT_POINTS, extent: float = DEFAULT_EXTENT) -> "PhaseSpaceGrid":
        half_width = extent * math.sqrt(space.lam)
        axis = numpy.linspace(-half_width, half_width, points)
        return PhaseSpaceGrid(axis, axis)


class WignerGrid:
    """Wigner function sampled with ``values[i, j] = W(x[j], p[i])``."""

    __slots__ = ("grid", "values", "lam")

    grid: PhaseSpaceGrid
    values: RealArray
    lam: float

    def __init__(self, grid: PhaseSpaceGrid, values: RealArray, lam: float):
        self.grid = grid
        self.values = frozen_array(numpy.asarray(values, dtype=numpy.float64))
        self.lam = lam

    def integral(self) -> float:
        inner = scipy.integrate.trapezoid(self.values, self.grid.x, axis=1)
        return float(scipy.integrate.trapezoid(inner, self.grid.p))

    def csv_rows(self) -> list[list[str]]:
        rows = [["p\\x", *(repr(float(x)) for x in self.grid.x)]]

        for p, row in zip(self.grid.p, self.values):
            rows.append([repr(float(p)), *(repr(float(value)) for value in row)])

        return rows

    def metadata(self) -> JsonDict:
        return {
            "lambda": self.lam,
            "x_min": float(self.grid.x[0]),
            "x_max": float(self.grid.x[-1]),
            "p_min": float(self.grid.p[0]),
            "p_max": float(self.grid.p[-1]),
            "shape": [int(self.values.shape[0]), int(self.values.shape[1])],
            "layout": "row-major, rows indexed by p, columns by x",
            "integral": self.integral()
        }


def _density_matrix(state: QuantumState | DensityState) -> ComplexArray:
    if isinstance(state, QuantumState):
        return numpy.outer(state.amplitudes, state.amplitudes.conj())

    return numpy.asarray(state.matrix)


def wigner(state: QuantumState | DensityState, grid: PhaseSpaceGrid) -> RealArray:
    """Iterative Laguerre recursion for the Fock-basis Wigner coefficients.

    Coordinates are scaled by sqrt(2 lambda) so the vacuum peak at the origin
    equals 1 / (pi lambda).
    """
    rho = _density_matrix(state)
    cutoff = rho.shape[0]
    lam = state.space.lam

    x_mesh, p_mesh = numpy.meshgrid(grid.x, grid.p)
    alpha = (x_mesh + 1j * p_mesh) / math.sqrt(2.0 * lam)

    coefficients: list[ComplexArray] = [numpy.zeros(alpha.shape, dtype=numpy.complex128) for _ in range(cutoff)]
    coefficients[0] = numpy.exp(-2.0 * numpy.abs(alpha) ** 2) / numpy.pi

    result = numpy.real(rho[0, 0]) * numpy.real(coefficients[0])

    for n in range(1, cutoff):
        coefficients[n] = 2.0 * alpha * coefficients[n - 1] / math.sqrt(n)
        result += 2.0 * numpy.real(rho[0, n] * coefficients[n])

    for m in range(1, cutoff):
        previous = coefficients[m].copy()
        coefficients[m] = (2.0 * numpy.conj(alpha) * previous - math.sqrt(m) * coefficients[m - 1]) / math.sqrt(m)
        result += numpy.real(rho[m, m] * coefficients[m])

        for n in range(m + 1, cutoff):
            updated = (2.0 * alpha * coefficients[n - 1] - math.sqrt(m) * previous) / math.sqrt(n)
            previous = coefficients[n].copy()
            coefficients[n] = updated
            result += 2.0 * numpy.real(rho[m, n] * coefficients[n])

    return typing.cast(RealArray, result / lam)


def wigner_grid(state: QuantumState | DensityState, grid: PhaseSpaceGrid | None = None) -> WignerGrid:
    if grid is None:
        grid = PhaseSpaceGrid.default(state.space)

    return WignerGrid(grid, wigner(state, grid), state.space.lam)
