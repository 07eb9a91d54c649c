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


from ll_qlg.typed import JsonDict

__all__ = ("PipelinePreset",)


class PipelinePreset:
    __slots__ = ("name", "dim", "n_t", "n_k", "k_f", "beta0", "lam")

    name: str
    dim: int
    n_t: int
    n_k: int
    k_f: float
    beta0: float
    lam: float

    def __init__(self, name: str, dim: int, n_t: int, n_k: int, k_f: float, beta0: float, lam: float):
        self.name = name
        self.dim = dim
        self.n_t = n_t
        self.n_k = n_k
        self.k_f = k_f
        self.beta0 = beta0
        self.lam = lam

    def get_dict(self) -> JsonDict:
        return {"name": self.name, "dim": self.dim, "N_t": self.n_t, "N_k": self.n_k, "k_f": self.k_f, "beta0": self.beta0, "lambda": self.lam}

    def __str__(self) -> str:
        return f"{self.name} (dim={self.dim}, N_t={self.n_t}, N_k={self.n_k}, k_f={self.k_f}, lambda={self.lam})"

    def __repr__(self) -> str:
        return f"PipelinePreset({self.name!r}, {self.dim!r}, {self.n_t!r}, {self.n_k!r}, {self.k_f!r}, {self.beta0!r}, {self.lam!r})"
