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


__all__ = ("DegenerateCodeError",)

from ll_qlg.simulation_error import SimulationError


class DegenerateCodeError(SimulationError):
    __slots__ = ("min_eigenvalue", "floor")

    min_eigenvalue: float
    floor: float

    def __init__(self, min_eigenvalue: float, floor: float):
        super().__init__(min_eigenvalue, floor)
        self.min_eigenvalue = min_eigenvalue
        self.floor = floor

    def __str__(self) -> str:
        return f"DegenerateCodeError codeword Gram matrix eigenvalue {self.min_eigenvalue:.3e} below {self.floor:.1e}"

    def __repr__(self) -> str:
        return f"DegenerateCodeError({self.min_eigenvalue!r}, {self.floor!r})"
