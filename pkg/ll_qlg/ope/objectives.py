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


import abc

import numpy

from ll_qlg.array_codec import check_constructor, encode_complex, decode_complex
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.synth.gate_fidelity import gate_fidelity
from ll_qlg.synth.logical_embedding import LogicalEmbedding
from ll_qlg.typed import ComplexArray, JsonDict, frozen_array

__all__ = ("ObjectiveBase", "StatePreparation", "GatePreparation", "objective_from_dict")


class ObjectiveBase(abc.ABC):
    """Loss of a sequence seen through ``outputs^dagger U inputs``."""

    __slots__ = ()

    @property
    @abc.abstractmethod
    def space(self) -> FockSpace:
        raise NotImplementedError()

    @abc.abstractmethod
    def inputs(self) -> ComplexArray:
        raise NotImplementedError()

    @abc.abstractmethod
    def outputs(self) -> ComplexArray:
        raise NotImplementedError()

    @abc.abstractmethod
    def loss_from_overlap(self, overlap: ComplexArray) -> float:
        raise NotImplementedError()

    @abc.abstractmethod
    def get_dict(self) -> JsonDict:
        raise NotImplementedError()


class StatePreparation(ObjectiveBase):
    __slots__ = ("initial", "target")

    initial: QuantumState
    target: QuantumState

    def __init__(self, initial: QuantumState, target: QuantumState):
        initial.space.check_same(target.space)
        self.initial = initial
        self.target = target

    @property
    def space(self) -> FockSpace:
        return self.initial.space

    def inputs(self) -> ComplexArray:
        return numpy.asarray(self.initial.amplitudes)[:, None]

    def outputs(self) -> ComplexArray:
        return numpy.asarray(self.target.amplitudes)[:, None]

    def loss_from_overlap(self, overlap: ComplexArray) -> float:
        fidelity = min(1.0, abs(complex(overlap[0, 0])) ** 2)
        return 1.0 - fidelity

    def get_dict(self) -> JsonDict:
        return {"_cons": "StatePreparation", "initial": self.initial.get_dict(), "target": self.target.get_dict()}

    @staticmethod
    def from_dict(data: JsonDict) -> "StatePreparation":
        check_constructor(data, "StatePreparation")
        return StatePreparation(QuantumState.from_dict(data["initial"]), QuantumState.from_dict(data["target"]))


class GatePreparation(ObjectiveBase):
    __slots__ = ("target_gate", "embedding")

    target_gate: ComplexArray
    embedding: LogicalEmbedding

    def __init__(self, target_gate: ComplexArray, embedding: LogicalEmbedding):
        target_gate = numpy.asarray(target_gate, dtype=numpy.complex128)

        if target_gate.shape != (2, 2):
            raise ValueError(f"Expected a 2x2 logical gate, found shape {target_gate.shape!r}")

        self.target_gate = frozen_array(target_gate)
        self.embedding = embedding

    @property
    def space(self) -> FockSpace:
        return self.embedding.space

    def inputs(self) -> ComplexArray:
        return numpy.asarray(self.embedding.q)

    def outputs(self) -> ComplexArray:
        return numpy.asarray(self.embedding.q)

    def loss_from_overlap(self, overlap: ComplexArray) -> float:
        return max(0.0, 1.0 - gate_fidelity(self.target_gate, overlap))

    def get_dict(self) -> JsonDict:
        q = numpy.asarray(self.embedding.q)

        return {
            "_cons": "GatePreparation",
            "target_gate": encode_complex(self.target_gate),
            "zero": QuantumState(self.space, q[:, 0]).get_dict(),
            "one": QuantumState(self.space, q[:, 1]).get_dict()
        }

    @staticmethod
    def from_dict(data: JsonDict) -> "GatePreparation":
        check_constructor(data, "GatePreparation")
        embedding = LogicalEmbedding(QuantumState.from_dict(data["zero"]), QuantumState.from_dict(data["one"]))
        return GatePreparation(decode_complex(data["target_gate"]), embedding)


def objective_from_dict(data: JsonDict) -> ObjectiveBase:
    match data.get("_cons"):
        case "StatePreparation":
            return StatePreparation.from_dict(data)
        case "GatePreparation":
            return GatePreparation.from_dict(data)
        case other:
            raise TypeError(f"Expected an objective Found `{other!r}`")
