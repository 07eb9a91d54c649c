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


__all__ = ("TraceDriftError",)

from ll_qlg.simulation_error import SimulationError


class TraceDriftError(SimulationError):
    __slots__ = ("drift", "threshold", "slice_index")

    drift: float
    threshold: float
    slice_index: int

    def __init__(self, drift: float, threshold: float, slice_index: int):
        super().__init__(drift, threshold, slice_index)
        self.drift = drift
        self.threshold = threshold
        self.slice_index = slice_index

    def __str__(self) -> str:
        return f"TraceDriftError density matrix trace drifted by {self.drift:.3e} in slice {self.slice_index} (threshold {self.threshold:.1e})"

    def __repr__(self) -> str:
        return f"TraceDriftError({self.drift!r}, {self.threshold!r}, {self.slice_index!r})"
