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
from ll_qlg.noise.noise_config import NoiseConfig
from ll_qlg.qlg.compiler import compile_pulse
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.typed import RealArray

__all__ = ("noisy_envelope", "noisy_sequence")


def noisy_envelope(beta: RealArray, zeta: float, seed: int, period: float = 2.0 * math.pi) -> RealArray:
    """beta_m + zeta xi_m / sqrt(dtau), xi_m i.i.d. standard normal.

    This is white noise of unit spectral density held constant over each
    slice of length dtau = period / N_t.
    """
    if not zeta >= 0:
        raise ValueError(f"zeta must be non-negative, got {zeta!r}")

    beta = numpy.asarray(beta, dtype=numpy.float64)

    if zeta == 0.0:
        return beta.copy()

    dtau = period / beta.size
    xi = numpy.random.default_rng(seed).standard_normal(beta.size)
    return beta + (zeta / math.sqrt(dtau)) * xi


def noisy_sequence(pulse: DrivePulse, cfg: NoiseConfig, t: float = 2.0 * math.pi) -> GateSequence:
    return compile_pulse(pulse.with_envelope(noisy_envelope(pulse.envelope, cfg.zeta, cfg.seed)), t)
