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

import numpy

from ll_qlg.array_codec import check_constructor, encode_complex, decode_complex
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.typed import ComplexArray, JsonDict, frozen_array

__all__ = ("QuantumState",)


class QuantumState:
    """Normalized pure state on a truncated Fock space.

    Construction never renormalizes unless explicitly asked to; a vector whose
    norm is off by more than ``norm_tolerance`` is rejected.
    """

    __slots__ = ("space", "amplitudes")

    NORM_TOLERANCE: typing.Final = 1e-12

    space: FockSpace
    amplitudes: ComplexArray

    def __init__(self, space: FockSpace, amplitudes: ComplexArray, *, norm_tolerance: float = NORM_TOLERANCE):
        amplitudes = numpy.asarray(amplitudes, dtype=numpy.complex128)

        if amplitudes.shape != (space.dim,):
            raise ValueError(f"Expected {space.dim} amplitudes, found shape `{amplitudes.shape!r}`")

        norm = float(numpy.linalg.norm(amplitudes))

        if abs(norm - 1.0) > norm_tolerance:
            raise ValueError(f"State norm {norm!r} deviates from 1 by more than {norm_tolerance:.1e}")

        self.space = space
        self.amplitudes = frozen_array(amplitudes)

    @staticmethod
    def from_amplitudes(space: FockSpace, amplitudes: typing.Any, *, normalize: bool = False) -> "QuantumState":
        vector = numpy.asarray(amplitudes, dtype=numpy.complex128)

        if normalize:
            norm = float(numpy.linalg.norm(vector))

            if norm == 0.0:
                raise ValueError("Cannot normalize the zero vector")

            vector = vector / norm

        return QuantumState(space, vector)

    def overlap(self, other: "QuantumState") -> complex:
        """<self|other>"""
        self.space.check_same(other.space)
        return complex(numpy.vdot(self.amplitudes, other.amplitudes))

    def mean_photon_number(self) -> float:
        populations = numpy.abs(self.amplitudes) ** 2
        return float(numpy.dot(numpy.arange(self.space.dim), populations))

    def get_dict(self) -> JsonDict:
        return {"_cons": "QuantumState", "space": self.space.get_dict(), "amplitudes": encode_complex(self.amplitudes)}

    @staticmethod
    def from_dict(data: JsonDict) -> "QuantumState":
        check_constructor(data, "QuantumState")
        return QuantumState(FockSpace.from_dict(data["space"]), decode_complex(data["amplitudes"]), norm_tolerance=1e-9)

    def __repr__(self) -> str:
        return f"QuantumState({self.space!r}, <{self.space.dim} amplitudes>)"
