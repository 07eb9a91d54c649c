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


import math
import typing

import numpy

from ll_qlg.array_codec import check_constructor, encode_real, decode_real
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.typed import RealArray, JsonDict, frozen_array

__all__ = ("GateSequence",)


class GateSequence:
    """Quantum lattice gates in application order.

    Gates are time-major: slice ``m`` holds gates ``m * n_k .. (m + 1) * n_k - 1``
    with ascending wavenumber. Every slice starts with a free rotation over
    one time step of the drive period, so the fold reproduces the drive in
    the frame co-rotating with the oscillator.
    """

    __slots__ = ("space", "theta", "gamma", "k", "n_t", "n_k", "k_f", "beta0", "duration")

    DRIVE_PERIOD: typing.Final = 2.0 * math.pi

    space: FockSpace
    theta: RealArray
    gamma: RealArray
    k: RealArray
    n_t: int
    n_k: int
    k_f: float
    beta0: float
    duration: float

    def __init__(
            self,
            *,
            space: FockSpace,
            theta: RealArray,
            gamma: RealArray,
            k: RealArray,
            n_t: int,
            n_k: int,
            k_f: float,
            beta0: float,
            duration: float = DRIVE_PERIOD
    ):
        theta = numpy.asarray(theta, dtype=numpy.float64).ravel()
        gamma = numpy.asarray(gamma, dtype=numpy.float64).ravel()
        k = numpy.asarray(k, dtype=numpy.float64).ravel()

        if not (theta.size == gamma.size == k.size == n_t * n_k):
            raise ValueError(f"Expected {n_t * n_k} gates, found theta={theta.size}, gamma={gamma.size}, k={k.size}")

        if numpy.any(k <= 0):
            raise ValueError("Gate wavenumbers must be positive")

        if numpy.any(gamma <= -math.pi) or numpy.any(gamma > math.pi):
            raise ValueError("Gate phases must lie in (-pi, pi]")

        self.space = space
        self.theta = frozen_array(theta)
        self.gamma = frozen_array(gamma)
        self.k = frozen_array(k)
        self.n_t = int(n_t)
        self.n_k = int(n_k)
        self.k_f = float(k_f)
        self.beta0 = float(beta0)
        self.duration = float(duration)

    def __len__(self) -> int:
        return int(self.theta.size)

    @property
    def dtau(self) -> float:
        return GateSequence.DRIVE_PERIOD / self.n_t

    def slice_gates(self, index: int) -> range:
        return range(index * self.n_k, (index + 1) * self.n_k)

    def gates(self) -> typing.Iterator[tuple[float, float, float]]:
        for theta, gamma, k in zip(self.theta, self.gamma, self.k):
            yield float(theta), float(gamma), float(k)

    def with_theta(self, theta: RealArray) -> "GateSequence":
        return GateSequence(
            space=self.space,
            theta=theta,
            gamma=self.gamma,
            k=self.k,
            n_t=self.n_t,
            n_k=self.n_k,
            k_f=self.k_f,
            beta0=self.beta0,
            duration=self.duration
        )

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "GateSequence",
            "space": self.space.get_dict(),
            "theta": encode_real(self.theta),
            "gamma": encode_real(self.gamma),
            "k": encode_real(self.k),
            "meta": {"N_t": self.n_t, "N_k": self.n_k, "k_f": self.k_f, "beta0": self.beta0, "T": self.duration}
        }

    @staticmethod
    def from_dict(data: JsonDict) -> "GateSequence":
        check_constructor(data, "GateSequence")
        meta = data["meta"]

        return GateSequence(
            space=FockSpace.from_dict(data["space"]),
            theta=decode_real(data["theta"]),
            gamma=decode_real(data["gamma"]),
            k=decode_real(data["k"]),
            n_t=int(meta["N_t"]),
            n_k=int(meta["N_k"]),
            k_f=float(meta["k_f"]),
            beta0=float(meta["beta0"]),
            duration=float(meta["T"])
        )

    def __repr__(self) -> str:
        return f"GateSequence({len(self)} gates, N_t={self.n_t}, N_k={self.n_k}, k_f={self.k_f})"
