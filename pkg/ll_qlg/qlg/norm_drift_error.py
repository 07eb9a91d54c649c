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


__all__ = ("NormDriftError",)

from ll_qlg.simulation_error import SimulationError


class NormDriftError(SimulationError):
    __slots__ = ("drift", "threshold", "gates_applied")

    drift: float
    threshold: float
    gates_applied: int

    def __init__(self, drift: float, threshold: float, gates_applied: int):
        super().__init__(drift, threshold, gates_applied)
        self.drift = drift
        self.threshold = threshold
        self.gates_applied = gates_applied

    def __str__(self) -> str:
        return f"NormDriftError norm drifted by {self.drift:.3e} after {self.gates_applied} gates (threshold {self.threshold:.1e})"

    def __repr__(self) -> str:
        return f"NormDriftError({self.drift!r}, {self.threshold!r}, {self.gates_applied!r})"
