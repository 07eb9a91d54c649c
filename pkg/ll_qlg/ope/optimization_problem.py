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

from ll_qlg.array_codec import check_constructor
from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.ope.objectives import ObjectiveBase, objective_from_dict
from ll_qlg.typed import RealArray, JsonDict

__all__ = ("OptimizationProblem",)


class OptimizationProblem:
    """Minimize the objective's loss over the envelope, |beta_m - beta0| <= delta.

    ``restarts`` counts starting points: the first is always beta0, the
    others are drawn uniformly inside the box from ``seed``.
    """

    __slots__ = ("objective", "pulse", "delta", "beta0", "budget", "tol", "t", "restarts", "seed")

    DEFAULT_BUDGET: typing.Final = 200
    DEFAULT_TOL: typing.Final = 1e-10

    objective: ObjectiveBase
    pulse: DrivePulse
    delta: float
    beta0: float
    budget: int
    tol: float
    t: float
    restarts: int
    seed: int

    def __init__(
            self,
            *,
            objective: ObjectiveBase,
            pulse: DrivePulse,
            delta: float,
            beta0: float | None = None,
            budget: int = DEFAULT_BUDGET,
            tol: float = DEFAULT_TOL,
            t: float = 2.0 * math.pi,
            restarts: int = 1,
            seed: int = 0
    ):
        objective.space.check_same(pulse.space)

        if beta0 is None:
            beta0 = pulse.beta0

        if not delta >= 0 or not math.isfinite(delta):
            raise ValueError(f"Bound delta must be a non-negative number, got {delta!r}")

        if budget < 1:
            raise ValueError(f"Evaluation budget must be positive, got {budget!r}")

        if not tol > 0:
            raise ValueError(f"Tolerance must be positive, got {tol!r}")

        if not t > 0:
            raise ValueError(f"Evolution time must be positive, got {t!r}")

        if restarts < 1:
            raise ValueError(f"At least one start is required, got {restarts!r}")

        self.objective = objective
        self.pulse = pulse
        self.delta = float(delta)
        self.beta0 = float(beta0)
        self.budget = int(budget)
        self.tol = float(tol)
        self.t = float(t)
        self.restarts = int(restarts)
        self.seed = int(seed)

    @property
    def n_t(self) -> int:
        return self.pulse.n_t

    def bounds(self) -> tuple[RealArray, RealArray]:
        lower = numpy.full(self.n_t, self.beta0 - self.delta)
        upper = numpy.full(self.n_t, self.beta0 + self.delta)
        return lower, upper

    def initial_beta(self) -> RealArray:
        return numpy.full(self.n_t, self.beta0)

    def starting_points(self) -> list[RealArray]:
        starts = [self.initial_beta()]

        if self.restarts > 1:
            lower, upper = self.bounds()
            rng = numpy.random.default_rng(self.seed)

            for _ in range(self.restarts - 1):
                starts.append(rng.uniform(lower, upper))

        return starts

    def is_feasible(self, beta: RealArray) -> bool:
        lower, upper = self.bounds()
        return bool(numpy.all(beta >= lower) and numpy.all(beta <= upper))

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "OptimizationProblem",
            "objective": self.objective.get_dict(),
            "pulse": self.pulse.get_dict(),
            "delta": self.delta,
            "beta0": self.beta0,
            "budget": self.budget,
            "tol": self.tol,
            "T": self.t,
            "restarts": self.restarts,
            "seed": self.seed
        }

    @staticmethod
    def from_dict(data: JsonDict) -> "OptimizationProblem":
        check_constructor(data, "OptimizationProblem")

        return OptimizationProblem(
            objective=objective_from_dict(data["objective"]),
            pulse=DrivePulse.from_dict(data["pulse"]),
            delta=float(data["delta"]),
            beta0=float(data["beta0"]),
            budget=int(data["budget"]),
            tol=float(data["tol"]),
            t=float(data["T"]),
            restarts=int(data["restarts"]),
            seed=int(data["seed"])
        )

    def __repr__(self) -> str:
        return f"OptimizationProblem({type(self.objective).__name__}, N_t={self.n_t}, beta0={self.beta0}, delta={self.delta})"
