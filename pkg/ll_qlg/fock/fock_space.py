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

from ll_qlg.array_codec import check_constructor
from ll_qlg.typed import JsonDict

__all__ = ("FockSpace",)


class FockSpace:
    """Truncated bosonic mode spanned by |0>, ..., |dim - 1>.

    Operators that are functions of the quadratures are built with
    ``dim + pad`` levels and truncated back to ``dim``.
    """

    __slots__ = ("dim", "lam", "pad")

    dim: typing.Final[int]
    lam: typing.Final[float]
    pad: typing.Final[int]

    def __init__(self, dim: int, lam: float = 1.0, pad: int | None = None):
        if dim < 2:
            raise ValueError(f"dim must be at least 2, got {dim!r}")

        if not lam > 0:
            raise ValueError(f"lambda must be positive, got {lam!r}")

        if pad is None:
            pad = FockSpace.default_pad(dim)

        if pad < 0:
            raise ValueError(f"pad must be non-negative, got {pad!r}")

        self.dim = int(dim)
        self.lam = float(lam)
        self.pad = int(pad)

    @staticmethod
    def default_pad(dim: int) -> int:
        return max(16, dim // 2)

    @property
    def padded_dim(self) -> int:
        return self.dim + self.pad

    def with_pad(self, pad: int) -> "FockSpace":
        return FockSpace(self.dim, self.lam, pad)

    def check_same(self, other: "FockSpace") -> None:
        if self != other:
            raise ValueError(f"Expected operands on `{self!r}` Found `{other!r}`")

    def get_dict(self) -> JsonDict:
        return {"_cons": "FockSpace", "dim": self.dim, "lambda": self.lam, "pad": self.pad}

    @staticmethod
    def from_dict(data: JsonDict) -> "FockSpace":
        check_constructor(data, "FockSpace")
        return FockSpace(int(data["dim"]), float(data["lambda"]), int(data["pad"]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockSpace):
            return NotImplemented

        return self.dim == other.dim and self.lam == other.lam and self.pad == other.pad

    def __hash__(self) -> int:
        return hash((self.dim, self.lam, self.pad))

    def __str__(self) -> str:
        return f"fock space with {self.dim} levels (lambda={self.lam}, pad={self.pad})"

    def __repr__(self) -> str:
        return f"FockSpace({self.dim}, {self.lam!r}, {self.pad})"
