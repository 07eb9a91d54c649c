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

from ll_qlg.array_codec import check_constructor
from ll_qlg.typed import JsonDict

__all__ = ("SliceMode", "NoiseConfig")


class SliceMode(enum.Enum):
    GATE_PRODUCT = "gate_product"
    GATE_SUM = "gate_sum"


class NoiseConfig:
    """Single-photon loss rate ``kappa`` and envelope noise strength ``zeta``, both in units of the oscillator frequency."""

    __slots__ = ("kappa", "zeta", "seed", "dt_substeps", "slice_mode")

    DEFAULT_SUBSTEPS: typing.Final = 4

    kappa: float
    zeta: float
    seed: int
    dt_substeps: int
    slice_mode: SliceMode

    def __init__(
            self,
            *,
            kappa: float = 0.0,
            zeta: float = 0.0,
            seed: int = 0,
            dt_substeps: int = DEFAULT_SUBSTEPS,
            slice_mode: SliceMode = SliceMode.GATE_PRODUCT
    ):
        if not kappa >= 0:
            raise ValueError(f"kappa must be non-negative, got {kappa!r}")

        if not zeta >= 0:
            raise ValueError(f"zeta must be non-negative, got {zeta!r}")

        if dt_substeps < 1:
            raise ValueError(f"dt_substeps must be at least 1, got {dt_substeps!r}")

        self.kappa = float(kappa)
        self.zeta = float(zeta)
        self.seed = int(seed)
        self.dt_substeps = int(dt_substeps)
        self.slice_mode = slice_mode

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "NoiseConfig",
            "kappa": self.kappa,
            "zeta": self.zeta,
            "seed": self.seed,
            "dt_substeps": self.dt_substeps,
            "slice_mode": self.slice_mode.value
        }

    @staticmethod
    def from_dict(data: JsonDict) -> "NoiseConfig":
        check_constructor(data, "NoiseConfig")

        return NoiseConfig(
            kappa=float(data["kappa"]),
            zeta=float(data["zeta"]),
            seed=int(data["seed"]),
            dt_substeps=int(data["dt_substeps"]),
            slice_mode=SliceMode(data["slice_mode"])
        )

    def __repr__(self) -> str:
        return f"NoiseConfig(kappa={self.kappa!r}, zeta={self.zeta!r}, seed={self.seed!r}, dt_substeps={self.dt_substeps!r}, slice_mode={self.slice_mode.value})"
