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


import csv
import datetime
import hashlib
import json
import logging
import os
import typing

from ll_qlg.cli.config_error import ConfigError
from ll_qlg.cli.run_config import RunConfig
from ll_qlg.constants import VERSION
from ll_qlg.typed import JsonDict

__all__ = ("RunDirectory", "dump_json", "config_hash")


def dump_json(data: typing.Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def config_hash(config: RunConfig) -> str:
    canonical = json.dumps(config.get_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _utc_now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


class RunDirectory:
    """Output directory of one run.

    Artifacts depend only on the configuration; timestamps are confined to
    ``manifest.json``.
    """

    __slots__ = ("path", "config", "started", "artifacts")

    MANIFEST: typing.Final = "manifest.json"

    path: str
    config: RunConfig
    started: str
    artifacts: list[str]

    def __init__(self, path: str, config: RunConfig):
        if os.path.exists(os.path.join(path, RunDirectory.MANIFEST)):
            raise ConfigError("out", f"`{path}` already holds a run", ConfigError.OUTPUT_EXISTS)

        os.makedirs(path, exist_ok=True)

        self.path = path
        self.config = config
        self.started = _utc_now()
        self.artifacts = []

    def _target(self, name: str) -> str:
        self.artifacts.append(name)
        return os.path.join(self.path, name)

    def write_json(self, name: str, data: JsonDict) -> None:
        with open(self._target(name), "w", encoding="utf-8", newline="\n") as handle:
            handle.write(dump_json(data))

    def write_csv(self, name: str, rows: typing.Iterable[typing.Sequence[str]]) -> None:
        with open(self._target(name), "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, delimiter=",", lineterminator="\n")
            writer.writerows(rows)

    def finish(self) -> None:
        manifest = {
            "tool": "ll_qlg",
            "version": VERSION,
            "command": self.config.command,
            "config": self.config.get_dict(),
            "config_sha256": config_hash(self.config),
            "artifacts": sorted(self.artifacts),
            "started": self.started,
            "finished": _utc_now()
        }

        with open(os.path.join(self.path, RunDirectory.MANIFEST), "w", encoding="utf-8", newline="\n") as handle:
            handle.write(dump_json(manifest))

        logging.info("wrote %d artifacts to %s", len(self.artifacts), self.path)
