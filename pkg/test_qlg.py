import logging
import math

import numpy
import scipy.linalg

from ll_qlg.constants import CALIBRATED_LAMBDA
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.fock.states import vacuum
from ll_qlg.haar.sampling import sample_haar_state
from ll_qlg.ncft.pulse_synthesis import synthesize_pulse
from ll_qlg.preparation import prepare_state
from ll_qlg.qlg.compiler import compile_pulse, gate_weights
from ll_qlg.qlg.elementary_gate import cosine_eigensystem, cosine_operator, elementary_gate, free_rotation_phases
from ll_qlg.qlg.floquet_correction import corrected_drive
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import apply_sequence, propagate, sequence_unitary, slice_operator, slice_states
from ll_qlg.synth.principal_hamiltonian import principal_generator
from ll_qlg.synth.target_unitary import unitarity_defect


def _random_hamiltonian(space: FockSpace, seed: int, scale: float) -> OperatorMatrix:
    rng = numpy.random.default_rng(seed)
    raw = rng.standard_normal((space.dim, space.dim)) + 1j * rng.standard_normal((space.dim, space.dim))
    h = 0.5 * (raw + raw.conj().T)
    h -= numpy.trace(h) / space.dim * numpy.eye(space.dim)
    return OperatorMatrix(space, scale * h / numpy.max(numpy.abs(h)), hermitian_flag=True)


def _idle_sequence(space: FockSpace, n_t: int, n_k: int) -> GateSequence:
    count = n_t * n_k
    return GateSequence(
        space=space,
        theta=numpy.zeros(count),
        gamma=numpy.zeros(count),
        k=numpy.ones(count),
        n_t=n_t,
        n_k=n_k,
        k_f=float(n_k),
        beta0=0.0
    )


def test_elementary_gate_is_exponential_of_cosine():
    for lam in (1.0, 0.5):
        space = FockSpace(10, lam)
        theta, gamma, k = 0.37, -1.2, 2.5

        gate = elementary_gate(space, theta, gamma, k).matrix
        expected = scipy.linalg.expm(-1j * theta / lam * cosine_operator(space, gamma, k))

        assert numpy.allclose(gate, expected, atol=1e-12)
        assert unitarity_defect(gate) < 1e-12


def test_cosine_operator_is_hermitian():
    space = FockSpace(8)
    operator = cosine_operator(space, 0.3, 1.7)

    assert numpy.allclose(operator, operator.conj().T, atol=1e-15)

    try:
        cosine_operator(space, 0.0, 0.0)
    except ValueError:
        pass
    else:
        raise AssertionError("zero wavenumber accepted")


def test_free_rotation_closes_over_period():
    space = FockSpace(40)

    for n_t in (1, 7, 64):
        phases = free_rotation_phases(space, n_t)
        assert numpy.allclose(phases ** n_t, 1.0, atol=1e-12)

    assert numpy.allclose(sequence_unitary(_idle_sequence(space, 16, 3)).matrix, numpy.eye(40), atol=1e-12)


def test_sequence_validation():
    space = FockSpace(4)

    for gamma, k in ((numpy.full(4, -math.pi), numpy.ones(4)), (numpy.zeros(4), numpy.zeros(4))):
        try:
            GateSequence(space=space, theta=numpy.zeros(4), gamma=gamma, k=k, n_t=2, n_k=2, k_f=2.0, beta0=1.0)
        except ValueError:
            pass
        else:
            raise AssertionError("invalid gate accepted")

    try:
        GateSequence(space=space, theta=numpy.zeros(3), gamma=numpy.zeros(4), k=numpy.ones(4), n_t=2, n_k=2, k_f=2.0, beta0=1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("ragged gate arrays accepted")


def test_compiled_angles():
    space = FockSpace(6)
    pulse = synthesize_pulse(_random_hamiltonian(space, 1, 0.5), 10.0, 5, 8, 0.8)
    seq = compile_pulse(pulse)

    assert len(seq) == 40
    expected = pulse.envelope[:, None] * pulse.amplitude.T * (2.0 * math.pi / 8) * 2.0
    assert numpy.allclose(seq.theta.reshape(8, 5), expected, rtol=1e-14, atol=0.0)
    assert numpy.allclose(gate_weights(pulse) * 0.8, expected, rtol=1e-14, atol=0.0)
    assert numpy.array_equal(seq.gamma.reshape(8, 5), pulse.phase.T)
    assert numpy.array_equal(seq.k[:5], pulse.k_grid)

    restored = GateSequence.from_dict(seq.get_dict())
    assert numpy.array_equal(restored.theta, seq.theta)
    assert restored.n_t == 8 and restored.n_k == 5 and restored.beta0 == 0.8


def test_fold_agrees_with_slice_operators():
    space = FockSpace(6)
    seq = compile_pulse(synthesize_pulse(_random_hamiltonian(space, 2, 0.5), 10.0, 5, 8, 1.0))

    product = numpy.eye(6, dtype=numpy.complex128)

    for index in range(seq.n_t):
        product = slice_operator(seq, index) @ product

    unitary = sequence_unitary(seq).matrix
    assert numpy.allclose(product, unitary, atol=1e-12)

    psi0 = vacuum(space)
    states = slice_states(seq, psi0)
    assert len(states) == seq.n_t + 1
    assert numpy.allclose(states[-1], unitary[:, 0], atol=1e-12)
    assert numpy.allclose(apply_sequence(seq, psi0).amplitudes, unitary[:, 0], atol=1e-12)
    assert numpy.allclose(propagate(seq, numpy.eye(6)[:, :2]), unitary[:, :2], atol=1e-12)


def test_trotter_refinement_converges():
    space = FockSpace(6)
    h = _random_hamiltonian(space, 3, 0.3)

    def unitary(n_t: int) -> numpy.ndarray:
        return sequence_unitary(compile_pulse(synthesize_pulse(h, 20.0, 20, n_t, 1.0))).matrix

    reference = unitary(256)
    errors = [float(numpy.linalg.norm(unitary(n_t) - reference, 2)) for n_t in (16, 32, 64)]

    logging.debug("trotter errors %s", errors)
    assert errors[0] > errors[1] > errors[2]


def test_state_preparation_from_vacuum():
    space = FockSpace(6)
    rng = numpy.random.default_rng(17)
    target = QuantumState.from_amplitudes(space, rng.standard_normal(6) + 1j * rng.standard_normal(6), normalize=True)

    run = prepare_state(vacuum(space), target, n_t=64, n_k=40, k_f=40.0)

    logging.debug("preparation fidelity %s", run.fidelity)
    assert run.fidelity > 0.9
    assert abs(numpy.linalg.norm(run.final_state.amplitudes) - 1.0) < 1e-10



def test_shifted_phase_flips_gate_angle():
    space = FockSpace(10, 0.5)
    theta, gamma, k = 0.81, -1.2, 1.7

    flipped = elementary_gate(space, theta, gamma + math.pi, k).matrix
    assert numpy.allclose(flipped, elementary_gate(space, -theta, gamma, k).matrix, atol=1e-12)


def test_opposite_angles_are_inverse():
    space = FockSpace(10)

    for theta, gamma, k in ((0.4, 0.3, 2.2), (3.1, -2.9, 0.6)):
        product = elementary_gate(space, theta, gamma, k).matrix @ elementary_gate(space, -theta, gamma, k).matrix
        assert numpy.allclose(product, numpy.eye(10), atol=1e-12)


def test_gate_cache_is_bit_exact():
    space = FockSpace(12)
    first = elementary_gate(space, 0.29, 1.1, 3.3)

    assert elementary_gate(space, 0.29, 1.1, 3.3) is first
    cached = numpy.array(first.matrix)

    elementary_gate.cache_clear()
    cosine_eigensystem.cache_clear()

    assert numpy.array_equal(elementary_gate(space, 0.29, 1.1, 3.3).matrix, cached)


def test_weak_drive_realizes_average_hamiltonian():
    space = FockSpace(6)
    errors = []

    for scale in (0.03, 0.001):
        h = _random_hamiltonian(space, 4, scale)
        u = sequence_unitary(compile_pulse(synthesize_pulse(h, 40.0, 80, 64, 1.0))).matrix
        generator, _, _ = principal_generator(u, 2.0 * math.pi, space.lam)
        errors.append(float(numpy.max(numpy.abs(generator - h.matrix))) / scale)

    logging.debug("relative first order errors %s", errors)
    assert errors[1] < 2e-2
    assert errors[1] < 0.3 * errors[0]


def test_floquet_corrections_keep_the_best_drive():
    space = FockSpace(6)
    rng = numpy.random.default_rng(23)
    target = QuantumState.from_amplitudes(space, rng.standard_normal(6) + 1j * rng.standard_normal(6), normalize=True)

    plain = prepare_state(vacuum(space), target, n_t=16, n_k=20, k_f=20.0, corrections=0)
    corrected = prepare_state(vacuum(space), target, n_t=16, n_k=20, k_f=20.0, corrections=3)

    assert numpy.array_equal(plain.pulse.amplitude, synthesize_pulse(plain.hamiltonian.hamiltonian, 20.0, 20, 16, 1.0).amplitude)
    assert corrected.fidelity >= plain.fidelity - 1e-12

    drive = corrected_drive(plain.hamiltonian.hamiltonian, lambda realized: 1.0 - abs(realized[:, 0] @ target.amplitudes.conj()) ** 2, k_f=20.0, n_k=20, n_t=16, corrections=3)
    assert drive.loss == min(drive.losses)
    assert len(drive.losses) <= 4
    assert abs(drive.loss - corrected.infidelity) < 1e-10

    try:
        corrected_drive(plain.hamiltonian.hamiltonian, lambda realized: 0.0, k_f=20.0, n_k=20, n_t=16, corrections=-1)
    except ValueError:
        pass
    else:
        raise AssertionError("negative correction count accepted")


def test_random_sixteen_level_state_preparation():
    space = FockSpace(16, CALIBRATED_LAMBDA)
    target = sample_haar_state(16, 5, space=space)

    run = prepare_state(vacuum(space), target, n_t=64, n_k=40, k_f=40.0)

    logging.debug("sixteen level preparation fidelity %s", run.fidelity)
    assert run.fidelity >= 0.99


if __name__ == "__main__":
    logging.getLogger().setLevel(level=logging.DEBUG)

    for _name, _test in list(globals().items()):
        if _name.startswith("test_") and callable(_test):
            _test()
            print("passed", _name)
