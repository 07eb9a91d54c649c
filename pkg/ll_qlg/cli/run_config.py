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


import json
import math
import os
import typing

import numpy

from ll_qlg.cli.config_error import ConfigError
from ll_qlg.constants import QlgPreset
from ll_qlg.noise.noise_config import SliceMode
from ll_qlg.pipeline_preset import PipelinePreset
from ll_qlg.qlg.floquet_correction import FLOQUET_CORRECTIONS
from ll_qlg.synth.logical_gates import logical_gate
from ll_qlg.typed import RealArray, JsonDict

__all__ = ("RunConfig", "sweep_values", "depth_values")

COMMANDS: typing.Final = ("prepare", "optimize", "haar", "noise", "codes-export")
CODE_NAMES: typing.Final = ("binomial", "cat", "gkp")

_FIELDS: typing.Final[dict[str, tuple[type, typing.Any]]] = {
    "command": (str, None),
    "dim": (int, None),
    "lam": (float, None),
    "n_t": (int, None),
    "n_k": (int, None),
    "k_f": (float, None),
    "beta0": (float, None),
    "corrections": (int, FLOQUET_CORRECTIONS),
    "delta": (float, 1.0),
    "delta_relative": (bool, False),
    "code": (str, None),
    "logical": (int, 0),
    "alpha": (float, None),
    "sigma": (float, None),
    "n_range": (int, None),
    "gate": (str, None),
    "state_prep": (bool, False),
    "target_file": (str, None),
    "haar_seed": (int, None),
    "d": (int, None),
    "samples": (int, 200),
    "bins": (int, 20),
    "depths": (str, None),
    "depth_threshold": (float, 0.95),
    "seed": (int, 0),
    "budget": (int, 200),
    "tol": (float, 1e-10),
    "restarts": (int, 1),
    "random_gates": (int, 0),
    "kappa_sweep": (str, None),
    "zeta_sweep": (str, None),
    "seeds": (int, 20),
    "dt_substeps": (int, 4),
    "slice_mode": (str, SliceMode.GATE_PRODUCT.value),
    "optimize_first": (bool, None),
    "out": (str, "run"),
    "workers": (int, None),
}


def _coerce(field: str, value: typing.Any) -> typing.Any:
    expected, _ = _FIELDS[field]

    if value is None:
        return None

    if expected is bool:
        if not isinstance(value, bool):
            raise ConfigError(field, f"expected a boolean, got {value!r}")

        return value

    if expected is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(field, f"expected an integer, got {value!r}")

        return value

    if expected is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise ConfigError(field, f"expected a finite number, got {value!r}")

        return float(value)

    if not isinstance(value, str):
        raise ConfigError(field, f"expected a string, got {value!r}")

    return value


def _parse_number(text: str, field: str, spec: str, kind: type[int] | type[float]) -> typing.Any:
    try:
        return kind(text)
    except ValueError as error:
        raise ConfigError(field, f"malformed sweep `{spec}`: {error}") from error


def _parse_count(text: str, field: str, spec: str) -> int:
    count = int(_parse_number(text, field, spec, int))

    if count < 1:
        raise ConfigError(field, f"sweep `{spec}` needs at least one point")

    return count


def sweep_values(spec: str, field: str) -> RealArray:
    """``a:b:N`` (linear), ``a:b:logN`` (logarithmic) or a single number."""
    match spec.split(":"):
        case [single]:
            values = numpy.array([_parse_number(single, field, spec, float)])

        case [start, stop, count] if count.startswith("log"):
            low = _parse_number(start, field, spec, float)
            high = _parse_number(stop, field, spec, float)

            if low <= 0 or high <= 0:
                raise ConfigError(field, f"logarithmic sweep bounds must be positive in `{spec}`")

            values = numpy.logspace(math.log10(low), math.log10(high), _parse_count(count[3:], field, spec))

        case [start, stop, count]:
            values = numpy.linspace(
                _parse_number(start, field, spec, float),
                _parse_number(stop, field, spec, float),
                _parse_count(count, field, spec)
            )

        case _:
            raise ConfigError(field, f"malformed sweep `{spec}`, expected a:b:N or a:b:logN")

    if not numpy.all(numpy.isfinite(values)) or numpy.any(values < 0):
        raise ConfigError(field, f"sweep `{spec}` must hold finite non-negative values")

    return values


def depth_values(spec: str) -> list[int]:
    """Comma separated slice counts, e.g. ``8,16,32,64``."""
    try:
        depths = [int(item) for item in spec.split(",")]
    except ValueError as error:
        raise ConfigError("depths", f"malformed depth list `{spec}`: {error}") from error

    if not depths or min(depths) < 1:
        raise ConfigError("depths", f"depths in `{spec}` must be positive")

    return depths


class RunConfig:
    """Parameters of one CLI run: defaults, then the JSON config file, then flags."""

    __slots__ = tuple(_FIELDS)

    command: str
    dim: int
    lam: float
    n_t: int
    n_k: int
    k_f: float
    beta0: float
    corrections: int
    delta: float
    delta_relative: bool
    code: str | None
    logical: int
    alpha: float | None
    sigma: float | None
    n_range: int | None
    gate: str | None
    state_prep: bool
    target_file: str | None
    haar_seed: int | None
    d: int | None
    samples: int
    bins: int
    depths: str | None
    depth_threshold: float
    seed: int
    budget: int
    tol: float
    restarts: int
    random_gates: int
    kappa_sweep: str | None
    zeta_sweep: str | None
    seeds: int
    dt_substeps: int
    slice_mode: str
    optimize_first: bool
    out: str
    workers: int | None

    def __init__(self, values: JsonDict):
        unknown = sorted(set(values) - set(_FIELDS))

        if unknown:
            raise ConfigError(unknown[0], "unknown configuration field")

        for field, (_, default) in _FIELDS.items():
            setattr(self, field, _coerce(field, values.get(field, default)))

        self._apply_preset()
        self.validate()

    @staticmethod
    def from_sources(command: str, config_file: str | None, overrides: JsonDict) -> "RunConfig":
        values: JsonDict = {}

        if config_file is not None:
            if not os.path.isfile(config_file):
                raise ConfigError("config", f"config file `{config_file}` does not exist")

            try:
                with open(config_file, encoding="utf-8") as handle:
                    loaded = json.load(handle)
            except (OSError, json.JSONDecodeError) as error:
                raise ConfigError("config", f"cannot read `{config_file}`: {error}") from error

            if not isinstance(loaded, dict):
                raise ConfigError("config", "config file must hold a JSON object")

            values.update(loaded)

        values.update(overrides)
        values["command"] = command
        return RunConfig(values)

    def preset(self) -> PipelinePreset:
        match self.command:
            case "haar":
                return QlgPreset.HAAR
            case "optimize" if self.gate is not None or self.random_gates > 0:
                return QlgPreset.LOGICAL_GATE
            case _ if self.code is not None:
                return QlgPreset.CODE_STATE
            case _:
                return QlgPreset.RANDOM_STATE

    def _apply_preset(self) -> None:
        preset = self.preset()

        if self.dim is None:
            self.dim = preset.dim

        if self.n_t is None:
            self.n_t = preset.n_t

        if self.n_k is None:
            self.n_k = preset.n_k

        if self.k_f is None:
            self.k_f = preset.k_f

        if self.beta0 is None:
            self.beta0 = preset.beta0

        if self.lam is None:
            self.lam = preset.lam

        if self.optimize_first is None:
            self.optimize_first = self.command == "noise"

    @property
    def effective_delta(self) -> float:
        return self.delta * abs(self.beta0) if self.delta_relative else self.delta

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError("command", f"unknown command `{self.command}`")

        if self.dim < 2:
            raise ConfigError("dim", "must be at least 2")

        for field in ("n_t", "n_k", "samples", "bins", "seeds", "budget", "restarts", "dt_substeps"):
            if getattr(self, field) < 1:
                raise ConfigError(field, "must be at least 1")

        for field in ("lam", "k_f", "tol"):
            if not getattr(self, field) > 0:
                raise ConfigError(field, "must be positive")

        if self.corrections < 0:
            raise ConfigError("corrections", "must be non-negative")

        if self.delta < 0:
            raise ConfigError("delta", "must be non-negative")

        if self.random_gates < 0:
            raise ConfigError("random_gates", "must be non-negative")

        if self.seed < 0:
            raise ConfigError("seed", "must be non-negative")

        if self.workers is not None and self.workers < 1:
            raise ConfigError("workers", "must be at least 1")

        if self.logical not in (0, 1):
            raise ConfigError("logical", "must be 0 or 1")

        if self.code is not None and self.code not in CODE_NAMES:
            raise ConfigError("code", f"unknown code `{self.code}`, expected one of {', '.join(CODE_NAMES)}")

        if self.slice_mode not in {mode.value for mode in SliceMode}:
            raise ConfigError("slice_mode", f"unknown slice mode `{self.slice_mode}`")

        if self.gate is not None:
            try:
                logical_gate(self.gate, self.seed)
            except ValueError as error:
                raise ConfigError("gate", str(error)) from error

        if self.d is not None and self.d < 2:
            raise ConfigError("d", "must be at least 2")

        match self.command:
            case "prepare":
                self._validate_target()

            case "optimize":
                if self.gate is None and self.random_gates == 0:
                    self._validate_target()
                elif self.code is None:
                    raise ConfigError("code", "logical gates need a code")

            case "haar":
                if self.depths is not None:
                    depth_values(self.depths)

                if not 0 < self.depth_threshold < 1:
                    raise ConfigError("depth_threshold", "must lie in (0, 1)")

            case "noise":
                if self.kappa_sweep is None and self.zeta_sweep is None:
                    raise ConfigError("kappa_sweep", "give a kappa sweep, a zeta sweep or both")

                if self.kappa_sweep is not None:
                    sweep_values(self.kappa_sweep, "kappa_sweep")

                if self.zeta_sweep is not None:
                    sweep_values(self.zeta_sweep, "zeta_sweep")

            case "codes-export":
                if self.code is None:
                    raise ConfigError("code", "codes export needs a code")

    def _validate_target(self) -> None:
        given = [name for name in ("code", "target_file", "haar_seed") if getattr(self, name) is not None]

        if len(given) != 1:
            raise ConfigError("target", "give exactly one of code, target_file or haar_seed")

        if self.haar_seed is not None:
            if self.haar_seed < 0:
                raise ConfigError("haar_seed", "must be non-negative")

            if self.d is not None and self.d > self.dim:
                raise ConfigError("d", f"Haar dimension {self.d} exceeds dim {self.dim}")

    def get_dict(self) -> JsonDict:
        return {field: getattr(self, field) for field in _FIELDS}

    def __repr__(self) -> str:
        return f"RunConfig({self.command!r}, dim={self.dim!r}, N_t={self.n_t!r})"
