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


__all__ = ("QuadratureConvergenceError",)

from ll_qlg.simulation_error import SimulationError


class QuadratureConvergenceError(SimulationError):
    __slots__ = ("estimate", "tolerance")

    estimate: float
    tolerance: float

    def __init__(self, estimate: float, tolerance: float):
        super().__init__(estimate, tolerance)
        self.estimate = estimate
        self.tolerance = tolerance

    def __str__(self) -> str:
        return f"QuadratureConvergenceError estimated error {self.estimate:.3e} exceeds tolerance {self.tolerance:.3e}"

    def __repr__(self) -> str:
        return f"QuadratureConvergenceError({self.estimate!r}, {self.tolerance!r})"
