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

import numpy

from ll_qlg.array_codec import check_constructor, encode_real, decode_real
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.typed import RealArray, JsonDict, frozen_array

__all__ = ("DrivePulse", "principal_angle")


def principal_angle(values: RealArray) -> RealArray:
    """Map angles into (-pi, pi]."""
    wrapped = numpy.asarray(values, dtype=numpy.float64).copy()
    wrapped[wrapped <= -math.pi] += 2.0 * math.pi
    wrapped[wrapped > math.pi] -= 2.0 * math.pi
    return wrapped


class DrivePulse:
    """Cosine-lattice drive A(k, tau) cos(k X + phi(k, tau)) with envelope beta(tau).

    ``amplitude`` and ``phase`` have shape (N_k, N_t); ``envelope`` has
    length N_t.
    """

    __slots__ = ("space", "k_grid", "tau_grid", "amplitude", "phase", "envelope", "beta0")

    space: FockSpace
    k_grid: RealArray
    tau_grid: RealArray
    amplitude: RealArray
    phase: RealArray
    envelope: RealArray
    beta0: float

    def __init__(
            self,
            *,
            space: FockSpace,
            k_grid: RealArray,
            tau_grid: RealArray,
            amplitude: RealArray,
            phase: RealArray,
            envelope: RealArray,
            beta0: float
    ):
        k_grid = numpy.asarray(k_grid, dtype=numpy.float64)
        tau_grid = numpy.asarray(tau_grid, dtype=numpy.float64)
        amplitude = numpy.asarray(amplitude, dtype=numpy.float64)
        phase = numpy.asarray(phase, dtype=numpy.float64)
        envelope = numpy.asarray(envelope, dtype=numpy.float64)

        shape = (k_grid.size, tau_grid.size)

        if amplitude.shape != shape or phase.shape != shape:
            raise ValueError(f"Expected amplitude and phase of shape {shape!r}, found {amplitude.shape!r} and {phase.shape!r}")

        if envelope.shape != (tau_grid.size,):
            raise ValueError(f"Expected envelope of length {tau_grid.size}, found shape {envelope.shape!r}")

        if numpy.any(k_grid <= 0):
            raise ValueError("Wavenumber grid must be strictly positive")

        if numpy.any(amplitude < 0):
            raise ValueError("Drive amplitude must be non-negative")

        if numpy.any(phase <= -math.pi) or numpy.any(phase > math.pi):
            raise ValueError("Drive phase must lie in (-pi, pi]")

        self.space = space
        self.k_grid = frozen_array(k_grid)
        self.tau_grid = frozen_array(tau_grid)
        self.amplitude = frozen_array(amplitude)
        self.phase = frozen_array(phase)
        self.envelope = frozen_array(envelope)
        self.beta0 = float(beta0)

    @property
    def n_k(self) -> int:
        return int(self.k_grid.size)

    @property
    def n_t(self) -> int:
        return int(self.tau_grid.size)

    @property
    def k_f(self) -> float:
        return float(self.k_grid[-1])

    def with_envelope(self, envelope: RealArray) -> "DrivePulse":
        return DrivePulse(
            space=self.space,
            k_grid=self.k_grid,
            tau_grid=self.tau_grid,
            amplitude=self.amplitude,
            phase=self.phase,
            envelope=envelope,
            beta0=self.beta0
        )

    def csv_rows(self) -> list[list[str]]:
        rows = [["k", "tau", "amplitude", "phase", "envelope"]]

        for i, k in enumerate(self.k_grid):
            for j, tau in enumerate(self.tau_grid):
                rows.append([repr(float(k)), repr(float(tau)), repr(float(self.amplitude[i, j])), repr(float(self.phase[i, j])), repr(float(self.envelope[j]))])

        return rows

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "DrivePulse",
            "space": self.space.get_dict(),
            "k_grid": encode_real(self.k_grid),
            "tau_grid": encode_real(self.tau_grid),
            "amplitude": encode_real(self.amplitude),
            "phase": encode_real(self.phase),
            "envelope": encode_real(self.envelope),
            "beta0": self.beta0
        }

    @staticmethod
    def from_dict(data: JsonDict) -> "DrivePulse":
        check_constructor(data, "DrivePulse")

        return DrivePulse(
            space=FockSpace.from_dict(data["space"]),
            k_grid=decode_real(data["k_grid"]),
            tau_grid=decode_real(data["tau_grid"]),
            amplitude=decode_real(data["amplitude"]),
            phase=decode_real(data["phase"]),
            envelope=decode_real(data["envelope"]),
            beta0=float(data["beta0"])
        )

    def __repr__(self) -> str:
        return f"DrivePulse(N_k={self.n_k}, N_t={self.n_t}, k_f={self.k_f}, beta0={self.beta0})"
