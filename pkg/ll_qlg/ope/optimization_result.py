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


from ll_qlg.array_codec import check_constructor, encode_real, decode_real
from ll_qlg.typed import RealArray, JsonDict, frozen_array

__all__ = ("OptimizationResult",)


class OptimizationResult:
    __slots__ = ("beta_opt", "loss_trace", "final_loss", "baseline_loss", "converged", "evaluations")

    beta_opt: RealArray
    loss_trace: tuple[tuple[int, float], ...]
    final_loss: float
    baseline_loss: float
    converged: bool
    evaluations: int

    def __init__(
            self,
            *,
            beta_opt: RealArray,
            loss_trace: list[tuple[int, float]],
            final_loss: float,
            baseline_loss: float,
            converged: bool,
            evaluations: int
    ):
        self.beta_opt = frozen_array(beta_opt)
        self.loss_trace = tuple((int(index), float(value)) for index, value in loss_trace)
        self.final_loss = float(final_loss)
        self.baseline_loss = float(baseline_loss)
        self.converged = bool(converged)
        self.evaluations = int(evaluations)

    def trace_csv_rows(self) -> list[list[str]]:
        rows = [["evaluation", "loss"]]
        rows.extend([str(index), repr(value)] for index, value in self.loss_trace)
        return rows

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "OptimizationResult",
            "beta_opt": encode_real(self.beta_opt),
            "loss_trace": [[index, value] for index, value in self.loss_trace],
            "final_loss": self.final_loss,
            "baseline_loss": self.baseline_loss,
            "converged": self.converged,
            "evaluations": self.evaluations
        }

    @staticmethod
    def from_dict(data: JsonDict) -> "OptimizationResult":
        check_constructor(data, "OptimizationResult")

        return OptimizationResult(
            beta_opt=decode_real(data["beta_opt"]),
            loss_trace=[(int(index), float(value)) for index, value in data["loss_trace"]],
            final_loss=float(data["final_loss"]),
            baseline_loss=float(data["baseline_loss"]),
            converged=bool(data["converged"]),
            evaluations=int(data["evaluations"])
        )

    def __repr__(self) -> str:
        return f"OptimizationResult(final_loss={self.final_loss:.3e}, baseline_loss={self.baseline_loss:.3e}, converged={self.converged})"
