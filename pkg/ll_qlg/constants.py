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

from ll_qlg.pipeline_preset import PipelinePreset

__all__ = ("VERSION", "CALIBRATED_LAMBDA", "QlgPreset")

VERSION: typing.Final = "1.0.0"

# wavenumber step k_f / N_k = 1 resolves 16 levels only with sqrt(lambda) k_f / N_k <= 0.5
CALIBRATED_LAMBDA: typing.Final = 0.25


class QlgPreset:
    __slots__ = ()

    RANDOM_STATE = PipelinePreset("random-state", 16, 64, 40, 40.0, 1.0, CALIBRATED_LAMBDA)
    CODE_STATE = PipelinePreset("code-state", 32, 64, 40, 40.0, 1.0, CALIBRATED_LAMBDA)
    LOGICAL_GATE = PipelinePreset("logical-gate", 32, 256, 40, 40.0, 1.0, CALIBRATED_LAMBDA)
    HAAR = PipelinePreset("haar", 12, 64, 40, 40.0, 1.0, CALIBRATED_LAMBDA)

    BY_NAME: typing.Final = {preset.name: preset for preset in (RANDOM_STATE, CODE_STATE, LOGICAL_GATE, HAAR)}
