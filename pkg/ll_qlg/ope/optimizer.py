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


import concurrent.futures
import logging

import numpy
import scipy.optimize

from ll_qlg.ope.loss_evaluator import LossEvaluator
from ll_qlg.ope.optimization_problem import OptimizationProblem
from ll_qlg.ope.optimization_result import OptimizationResult
from ll_qlg.qlg.compiler import compile_pulse
from ll_qlg.qlg.simulator import propagate
from ll_qlg.typed import RealArray

__all__ = ("optimize", "loss")


def loss(problem: OptimizationProblem, beta: RealArray) -> float:
    """Infidelity after compiling the pulse with envelope ``beta`` and folding it."""
    sequence = compile_pulse(problem.pulse.with_envelope(beta), problem.t)
    objective = problem.objective
    block = propagate(sequence, objective.inputs())
    return objective.loss_from_overlap(objective.outputs().conj().T @ block)


class _BestSeen:
    __slots__ = ("beta", "loss", "evaluations", "trace", "last_beta", "last_loss")

    beta: RealArray
    loss: float
    evaluations: int
    trace: list[tuple[int, float]]
    last_beta: RealArray
    last_loss: float

    def __init__(self, beta: RealArray, value: float):
        self.beta = beta.copy()
        self.loss = value
        self.evaluations = 1
        self.trace = [(0, value)]
        self.last_beta = beta.copy()
        self.last_loss = value

    def record(self, beta: RealArray, value: float) -> None:
        self.evaluations += 1
        self.last_beta = beta.copy()
        self.last_loss = value

        if value < self.loss:
            self.beta = beta.copy()
            self.loss = value

    def accept(self, beta: RealArray) -> None:
        # scipy reports the accepted iterate, which is the last one evaluated
        if numpy.array_equal(beta, self.last_beta):
            value = self.last_loss
        else:
            value = self.loss

        self.trace.append((self.evaluations, min(value, self.trace[-1][1])))


def optimize(problem: OptimizationProblem, *, executor: concurrent.futures.Executor | None = None) -> OptimizationResult:
    evaluator = LossEvaluator(problem)
    baseline_beta = problem.initial_beta()
    baseline = evaluator.loss(baseline_beta)

    if problem.delta == 0.0:
        return OptimizationResult(
            beta_opt=baseline_beta,
            loss_trace=[(0, baseline)],
            final_loss=baseline,
            baseline_loss=baseline,
            converged=True,
            evaluations=1
        )

    lower, upper = problem.bounds()
    best = _BestSeen(baseline_beta, baseline)
    converged = False

    def fun(beta: RealArray) -> tuple[float, RealArray]:
        beta = numpy.clip(beta, lower, upper)
        value, gradient = evaluator.loss_and_gradient(beta, executor=executor)
        best.record(beta, value)
        return value, gradient

    for start_index, start in enumerate(problem.starting_points()):
        remaining = problem.budget - best.evaluations

        if remaining <= 0:
            logging.debug("evaluation budget exhausted before start %d", start_index)
            break

        outcome = scipy.optimize.minimize(
            fun,
            start,
            jac=True,
            method="L-BFGS-B",
            bounds=scipy.optimize.Bounds(lower, upper),
            callback=best.accept,
            options={"maxfun": remaining, "maxiter": remaining, "ftol": problem.tol, "gtol": problem.tol}
        )

        logging.debug("start %d finished with loss %s (%s)", start_index, outcome.fun, outcome.message)
        converged = converged or bool(outcome.success)

    logging.info("optimized envelope loss %s -> %s in %d evaluations", baseline, best.loss, best.evaluations)

    return OptimizationResult(
        beta_opt=best.beta,
        loss_trace=best.trace,
        final_loss=best.loss,
        baseline_loss=baseline,
        converged=converged,
        evaluations=best.evaluations
    )
