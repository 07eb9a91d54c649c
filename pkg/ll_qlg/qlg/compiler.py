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

from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.typed import RealArray

__all__ = ("compile_pulse", "gate_weights")


def gate_weights(pulse: DrivePulse, t: float = 2.0 * math.pi) -> RealArray:
    """theta per unit envelope, A(k_n, tau_m) (T / N_t) (k_f / N_k), shape (N_t, N_k)."""
    dk = float(pulse.k_grid[0])
    dtau = t / pulse.n_t
    return numpy.ascontiguousarray(pulse.amplitude.T) * (dtau * dk)


def compile_pulse(pulse: DrivePulse, t: float = 2.0 * math.pi) -> GateSequence:
    """Trotterize a drive pulse into time-major quantum lattice gates.

    theta_{n,m} = beta(tau_m) A(k_n, tau_m) (T / N_t) (k_f / N_k),
    gamma_{n,m} = phi(k_n, tau_m).
    """
    if not t > 0:
        raise ValueError(f"Evolution time must be positive, got {t!r}")

    theta = gate_weights(pulse, t) * pulse.envelope[:, None]
    gamma = numpy.ascontiguousarray(pulse.phase.T)
    k = numpy.broadcast_to(pulse.k_grid[None, :], theta.shape)

    return GateSequence(
        space=pulse.space,
        theta=theta,
        gamma=gamma,
        k=k,
        n_t=pulse.n_t,
        n_k=pulse.n_k,
        k_f=pulse.k_f,
        beta0=pulse.beta0,
        duration=t
    )
