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


import typing

__all__ = ("ConfigError",)


class ConfigError(ValueError):
    __slots__ = ("field", "message", "kind")

    INVALID: typing.Final = "invalid-config"
    TARGET_NOT_FOUND: typing.Final = "target-not-found"
    OUTPUT_EXISTS: typing.Final = "output-exists"

    field: str | None
    message: str
    kind: str

    def __init__(self, field: str | None, message: str, kind: str = INVALID):
        super().__init__(field, message, kind)
        self.field = field
        self.message = message
        self.kind = kind

    def get_dict(self) -> dict[str, str | None]:
        return {"error": self.kind, "field": self.field, "message": self.message}

    def __str__(self) -> str:
        return f"ConfigError {self.kind} {self.field!r}: {self.message}"

    def __repr__(self) -> str:
        return f"ConfigError({self.field!r}, {self.message!r}, {self.kind!r})"
