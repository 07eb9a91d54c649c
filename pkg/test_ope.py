import concurrent.futures
import logging

import numpy

from ll_qlg.codes.codewords import binomial_code
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.fock.states import vacuum
from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.ncft.ncft_kernel_table import k_grid, tau_grid
from ll_qlg.ope.loss_evaluator import LossEvaluator
from ll_qlg.ope.objectives import GatePreparation, StatePreparation, objective_from_dict
from ll_qlg.ope.optimization_problem import OptimizationProblem
from ll_qlg.ope.optimization_result import OptimizationResult
from ll_qlg.ope.optimizer import loss, optimize
from ll_qlg.preparation import prepare_state
from ll_qlg.synth.logical_gates import LogicalGate

space = FockSpace(6)
target = QuantumState.from_amplitudes(space, [0.3, 0.5j, -0.4, 0.2, 0.1 + 0.1j, 0.05], normalize=True)
prepared = prepare_state(vacuum(space), target, n_t=8, n_k=10, k_f=20.0)


def _problem(delta: float, **kwargs) -> OptimizationProblem:
    return OptimizationProblem(objective=StatePreparation(vacuum(space), target), pulse=prepared.pulse, delta=delta, **kwargs)


def _idle_pulse(fock: FockSpace, n_t: int, n_k: int) -> DrivePulse:
    return DrivePulse(
        space=fock,
        k_grid=k_grid(float(n_k), n_k),
        tau_grid=tau_grid(n_t),
        amplitude=numpy.zeros((n_k, n_t)),
        phase=numpy.zeros((n_k, n_t)),
        envelope=numpy.ones(n_t),
        beta0=1.0
    )


def test_idle_pulse_has_zero_loss():
    state = QuantumState.from_amplitudes(space, numpy.arange(1, 7) * (1.0 + 0.5j), normalize=True)
    problem = OptimizationProblem(objective=StatePreparation(state, state), pulse=_idle_pulse(space, 8, 3), delta=0.5)

    assert LossEvaluator(problem).loss(problem.initial_beta()) < 1e-12

    code = binomial_code(FockSpace(8))
    identity = OptimizationProblem(objective=GatePreparation(LogicalGate.IDENTITY, code.embedding), pulse=_idle_pulse(code.space, 8, 3), delta=0.5)
    flip = OptimizationProblem(objective=GatePreparation(LogicalGate.PAULI_X, code.embedding), pulse=_idle_pulse(code.space, 8, 3), delta=0.5)

    assert loss(identity, identity.initial_beta()) < 1e-12
    assert abs(loss(flip, flip.initial_beta()) - 2.0 / 3.0) < 1e-12


def test_evaluator_matches_compiled_loss():
    problem = _problem(0.5)
    evaluator = LossEvaluator(problem)
    rng = numpy.random.default_rng(1)

    assert abs(evaluator.loss(problem.initial_beta()) - prepared.infidelity) < 1e-10

    for _ in range(3):
        beta = rng.uniform(0.5, 1.5, problem.n_t)
        assert abs(evaluator.loss(beta) - loss(problem, beta)) < 1e-10

    beta = rng.uniform(0.5, 1.5, problem.n_t)
    assert loss(problem, beta) == loss(problem, beta)


def test_gradient_matches_fourth_order_stencil():
    problem = _problem(0.5)
    evaluator = LossEvaluator(problem)
    beta = numpy.random.default_rng(2).uniform(0.7, 1.3, problem.n_t)

    value, gradient = evaluator.loss_and_gradient(beta)
    assert abs(value - evaluator.loss(beta)) < 1e-14

    h = 1e-3
    reference = numpy.zeros(problem.n_t)

    for index in range(problem.n_t):
        def shifted(offset: float) -> float:
            point = beta.copy()
            point[index] += offset
            return evaluator.loss(point)

        reference[index] = (-shifted(2 * h) + 8 * shifted(h) - 8 * shifted(-h) + shifted(-2 * h)) / (12 * h)

    assert numpy.max(numpy.abs(gradient - reference)) <= 1e-4 * numpy.max(numpy.abs(reference)) + 1e-9


def test_gradient_with_executor_is_identical():
    problem = _problem(0.5)
    evaluator = LossEvaluator(problem)
    beta = numpy.random.default_rng(3).uniform(0.6, 1.4, problem.n_t)

    with concurrent.futures.ThreadPoolExecutor(max_workers=3) as executor:
        parallel = evaluator.loss_and_gradient(beta, executor=executor)

    serial = evaluator.loss_and_gradient(beta)
    assert parallel[0] == serial[0]
    assert numpy.array_equal(parallel[1], serial[1])


def test_gradient_respects_box_edges():
    problem = _problem(0.5)
    lower, upper = problem.bounds()
    beta = problem.initial_beta().copy()
    beta[0] = lower[0]
    beta[1] = upper[1]

    _, gradient = LossEvaluator(problem).loss_and_gradient(beta)
    assert numpy.all(numpy.isfinite(gradient))


def test_zero_delta_returns_baseline():
    problem = _problem(0.0)
    result = optimize(problem)

    assert result.converged
    assert numpy.array_equal(result.beta_opt, problem.initial_beta())
    assert result.final_loss == result.baseline_loss
    assert abs(result.final_loss - loss(problem, problem.initial_beta())) < 1e-10


def test_optimize_improves_within_bounds():
    problem = _problem(0.5, budget=15)
    result = optimize(problem)

    assert result.final_loss <= result.baseline_loss
    assert problem.is_feasible(result.beta_opt)
    assert abs(loss(problem, result.beta_opt) - result.final_loss) < 1e-10

    trace = [value for _, value in result.loss_trace]
    assert trace[0] == result.baseline_loss
    assert all(later <= earlier for earlier, later in zip(trace, trace[1:]))

    rows = result.trace_csv_rows()
    assert rows[0] == ["evaluation", "loss"] and len(rows) == len(trace) + 1

    restored = OptimizationResult.from_dict(result.get_dict())
    assert restored.final_loss == result.final_loss
    assert numpy.array_equal(restored.beta_opt, result.beta_opt)


def test_optimize_is_reproducible():
    first = optimize(_problem(0.3, budget=12, restarts=2, seed=4))
    second = optimize(_problem(0.3, budget=12, restarts=2, seed=4))

    assert first.get_dict() == second.get_dict()


def test_restart_points():
    problem = _problem(0.25, restarts=3, seed=9)
    starts = problem.starting_points()

    assert len(starts) == 3
    assert numpy.array_equal(starts[0], problem.initial_beta())
    assert all(problem.is_feasible(start) for start in starts)


def test_problem_validation():
    for kwargs in ({"delta": -0.1}, {"delta": float("inf")}, {"delta": 0.1, "budget": 0}, {"delta": 0.1, "restarts": 0}):
        try:
            _problem(**kwargs)
        except ValueError:
            pass
        else:
            raise AssertionError(f"problem {kwargs!r} accepted")

    try:
        OptimizationProblem(objective=StatePreparation(vacuum(FockSpace(7)), vacuum(FockSpace(7))), pulse=prepared.pulse, delta=0.1)
    except ValueError:
        pass
    else:
        raise AssertionError("mismatched spaces accepted")


def test_problem_serialization():
    problem = _problem(0.4, budget=30, restarts=2, seed=5)
    restored = OptimizationProblem.from_dict(problem.get_dict())
    beta = numpy.random.default_rng(6).uniform(0.6, 1.4, problem.n_t)

    assert restored.get_dict() == problem.get_dict()
    assert abs(loss(restored, beta) - loss(problem, beta)) < 1e-14

    code = binomial_code(FockSpace(8))
    objective = GatePreparation(LogicalGate.HADAMARD, code.embedding)
    rebuilt = objective_from_dict(objective.get_dict())
    assert numpy.allclose(rebuilt.inputs(), objective.inputs(), atol=1e-12)


if __name__ == "__main__":
    logging.getLogger().setLevel(level=logging.DEBUG)

    for _name, _test in list(globals().items()):
        if _name.startswith("test_") and callable(_test):
            _test()
            print("passed", _name)
