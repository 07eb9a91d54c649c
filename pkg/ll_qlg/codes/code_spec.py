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


import enum
import typing

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.synth.logical_embedding import LogicalEmbedding

__all__ = ("CodeKind", "CodeSpec")


class CodeKind(enum.Enum):
    BINOMIAL = "binomial"
    CAT = "cat"
    GKP = "gkp"
    CUSTOM = "custom"


class CodeSpec:
    __slots__ = ("kind", "space", "params", "zero_l", "one_l", "embedding")

    kind: CodeKind
    space: FockSpace
    params: dict[str, typing.Any]
    zero_l: QuantumState
    one_l: QuantumState
    embedding: LogicalEmbedding

    def __init__(self, *, kind: CodeKind, space: FockSpace, params: dict[str, typing.Any], zero_l: QuantumState, one_l: QuantumState):
        space.check_same(zero_l.space)
        space.check_same(one_l.space)

        self.kind = kind
        self.space = space
        self.params = dict(params)
        self.zero_l = zero_l
        self.one_l = one_l
        self.embedding = LogicalEmbedding(zero_l, one_l)

    def codeword(self, index: int) -> QuantumState:
        match index:
            case 0:
                return self.zero_l
            case 1:
                return self.one_l
            case _:
                raise ValueError(f"Logical index must be 0 or 1, got {index!r}")

    def codeword_overlap(self) -> float:
        return abs(self.zero_l.overlap(self.one_l))

    def mean_photon_numbers(self) -> tuple[float, float]:
        return self.zero_l.mean_photon_number(), self.one_l.mean_photon_number()

    def __str__(self) -> str:
        return f"{self.kind.value} code on {self.space} with {self.params}"

    def __repr__(self) -> str:
        return f"CodeSpec(kind={self.kind!r}, space={self.space!r}, params={self.params!r})"
