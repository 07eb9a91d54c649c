import logging
import timeit

import numpy

from ll_qlg.codes.codewords import code_by_name
from ll_qlg.constants import CALIBRATED_LAMBDA
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.fock.states import vacuum
from ll_qlg.haar.benchmark import benchmark, depth_scan
from ll_qlg.haar.sampling import sample_haar_state
from ll_qlg.ncft.ncft_kernel_table import build_kernel_table, f_target
from ll_qlg.ncft.pulse_synthesis import reconstruct_operator
from ll_qlg.noise.sweeps import sweep_kappa
from ll_qlg.ope.objectives import GatePreparation, StatePreparation
from ll_qlg.ope.optimization_problem import OptimizationProblem
from ll_qlg.ope.optimizer import optimize
from ll_qlg.preparation import prepare_gate, prepare_state
from ll_qlg.qlg.compiler import compile_pulse
from ll_qlg.synth.logical_gates import logical_gate

CODES = ("binomial", "cat", "gkp")


def benchmark_reconstruction():
    space = FockSpace(16, CALIBRATED_LAMBDA)
    rng = numpy.random.default_rng(16)
    raw = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
    h = 0.5 * (raw + raw.conj().T)
    h -= numpy.trace(h) / 16 * numpy.eye(16)
    operator = OperatorMatrix(space, h / numpy.max(numpy.abs(h)), hermitian_flag=True)

    errors = []

    for n_k in (40, 80):
        table = build_kernel_table(space, 40.0, n_k, 64)
        errors.append(float(numpy.max(numpy.abs(reconstruct_operator(f_target(operator, table), table).matrix - operator.matrix))))

    print("reconstruction errors", errors)
    assert errors[0] < 1e-2
    assert errors[1] <= errors[0]


def benchmark_random_state_preparation():
    space = FockSpace(16, CALIBRATED_LAMBDA)
    table = build_kernel_table(space, 40.0, 40, 64)

    for seed in range(3):
        target = sample_haar_state(16, seed, space=space)
        plain = prepare_state(vacuum(space), target, n_t=64, n_k=40, k_f=40.0, table=table, corrections=0)
        run = prepare_state(vacuum(space), target, n_t=64, n_k=40, k_f=40.0, table=table)

        print("random target", seed, "plain fidelity", plain.fidelity, "fidelity", run.fidelity)
        assert run.fidelity >= 0.99


def benchmark_haar_statistics():
    report = benchmark(4, 64, 40, 40.0, 500, 1)

    print(report)
    assert report.failures == 0
    assert report.mean_prep_fidelity >= 0.95
    assert abs(report.mean_fidelity_to_ref - 0.25) <= 0.03
    assert report.ks_statistic < 0.12


def benchmark_haar_depth_scaling():
    for d in (2, 4, 8):
        scan = depth_scan(d, (8, 16, 32, 64), n_k=40, k_f=40.0, samples=50, seed=d)

        print(scan, scan.mean_fidelities)
        assert scan.minimal_depth is not None


def benchmark_code_preparation():
    space = FockSpace(32, CALIBRATED_LAMBDA)
    psi0 = vacuum(space)

    for name in CODES:
        target = code_by_name(name, space).codeword(0)
        pulse = prepare_state(psi0, target, n_t=64, n_k=40, k_f=40.0).pulse
        problem = OptimizationProblem(objective=StatePreparation(psi0, target), pulse=pulse, delta=0.5, budget=400, restarts=2)
        result = optimize(problem)

        print(name, "baseline", result.baseline_loss, "optimized", result.final_loss)
        assert result.final_loss <= 1e-4


def benchmark_logical_gates():
    space = FockSpace(32, CALIBRATED_LAMBDA)

    for name in CODES:
        code = code_by_name(name, space)
        table = build_kernel_table(space, 40.0, 40, 256)

        for gate in ("H", "S", "T"):
            run = prepare_gate(code, logical_gate(gate), n_t=256, n_k=40, k_f=40.0, table=table)
            problem = OptimizationProblem(objective=GatePreparation(run.logical_gate, code.embedding), pulse=run.pulse, delta=2.0, budget=400)
            result = optimize(problem)

            print(name, gate, "baseline", run.gate_error, "optimized", result.final_loss)
            assert result.final_loss <= 1e-3


def benchmark_noise_bound():
    space = FockSpace(16, CALIBRATED_LAMBDA)
    psi0 = vacuum(space)
    target = code_by_name("binomial", space).codeword(0)

    pulse = prepare_state(psi0, target, n_t=64, n_k=40, k_f=40.0).pulse
    result = optimize(OptimizationProblem(objective=StatePreparation(psi0, target), pulse=pulse, delta=0.5, budget=200))
    rows = sweep_kappa(compile_pulse(pulse.with_envelope(result.beta_opt)), psi0, target, list(numpy.logspace(-6.0, -1.0, 11)))

    for row in rows:
        print("kappa", row.parameter, "infidelity", row.mean_infidelity, "bound", row.bound)

        if row.parameter >= 1e-4:
            assert row.bound is not None and row.bound > 0.0
            assert 0.5 * row.bound <= row.mean_infidelity <= 2.0 * row.bound


if __name__ == "__main__":
    logging.getLogger().setLevel(level=logging.INFO)

    for _name, _benchmark in list(globals().items()):
        if _name.startswith("benchmark_") and callable(_benchmark) and _benchmark is not benchmark:
            print(_name, timeit.timeit(_benchmark, number=1))
