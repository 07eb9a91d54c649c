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
import scipy.integrate

from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import slice_states
from ll_qlg.typed import RealArray

__all__ = ("photon_number_trajectory", "coherent_bound")


def photon_number_trajectory(seq: GateSequence, psi0: QuantumState) -> RealArray:
    """Mean photon number at every slice boundary of the lossless evolution."""
    levels = numpy.arange(seq.space.dim)
    return numpy.array([float(numpy.dot(levels, numpy.abs(state) ** 2)) for state in slice_states(seq, psi0)])


def coherent_bound(seq: GateSequence, psi0: QuantumState, kappa: float) -> float:
    """No-jump fidelity ceiling exp(-kappa * integral of n(t) dt)."""
    if not kappa >= 0:
        raise ValueError(f"kappa must be non-negative, got {kappa!r}")

    if kappa == 0.0:
        return 1.0

    photons = photon_number_trajectory(seq, psi0)
    exposure = float(scipy.integrate.trapezoid(photons, dx=seq.dtau))
    return math.exp(-kappa * exposure)
