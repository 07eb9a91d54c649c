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


__all__ = ("InsufficientDimensionError",)

from ll_qlg.simulation_error import SimulationError


class InsufficientDimensionError(SimulationError):
    __slots__ = ("dim", "required", "reason")

    dim: int
    required: int | None
    reason: str

    def __init__(self, dim: int, required: int | None, reason: str):
        super().__init__(dim, required, reason)
        self.dim = dim
        self.required = required
        self.reason = reason

    def __str__(self) -> str:
        requirement = f" (need at least {self.required})" if self.required is not None else ""
        return f"InsufficientDimensionError dim {self.dim}{requirement}: {self.reason}"

    def __repr__(self) -> str:
        return f"InsufficientDimensionError({self.dim}, {self.required!r}, {self.reason!r})"
