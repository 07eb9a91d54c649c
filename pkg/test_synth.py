import logging
import math

import numpy
import scipy.linalg
import scipy.stats

from ll_qlg.codes.codewords import binomial_code
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.fock.states import fock_state
from ll_qlg.synth.gate_fidelity import gate_fidelity
from ll_qlg.synth.householder import householder_unitary
from ll_qlg.synth.logical_embedding import restrict_to_code
from ll_qlg.synth.logical_gate_embedding import embed_logical_gate
from ll_qlg.synth.logical_gates import LogicalGate, logical_gate, random_su2, special_unitary
from ll_qlg.synth.principal_hamiltonian import matched_generator, principal_generator, principal_hamiltonian
from ll_qlg.synth.target_unitary import TargetUnitary, unitarity_defect


def _random_state(space: FockSpace, rng: numpy.random.Generator) -> QuantumState:
    amplitudes = rng.standard_normal(space.dim) + 1j * rng.standard_normal(space.dim)
    return QuantumState.from_amplitudes(space, amplitudes, normalize=True)


def test_householder_maps_source_to_target():
    space = FockSpace(32)
    rng = numpy.random.default_rng(5)

    for _ in range(100):
        psi0 = _random_state(space, rng)
        psi_tar = _random_state(space, rng)
        u = householder_unitary(psi0, psi_tar)

        assert numpy.linalg.norm(u.matrix @ psi0.amplitudes - psi_tar.amplitudes) < 1e-12
        assert unitarity_defect(u.matrix) < 1e-12


def test_householder_collinear_states():
    space = FockSpace(6)
    rng = numpy.random.default_rng(9)
    psi0 = _random_state(space, rng)
    rotated = QuantumState(space, psi0.amplitudes * numpy.exp(0.4j))

    u = householder_unitary(psi0, rotated)
    assert numpy.linalg.norm(u.matrix @ psi0.amplitudes - rotated.amplitudes) < 1e-12

    identity = householder_unitary(psi0, psi0)
    assert numpy.allclose(identity.matrix, numpy.eye(6), atol=1e-12)


def test_principal_logarithm_round_trip():
    space = FockSpace(8)

    for seed in range(100):
        matrix = scipy.stats.unitary_group.rvs(8, random_state=seed)
        generator = principal_hamiltonian(TargetUnitary(space, matrix))
        h = generator.hamiltonian.matrix

        assert numpy.allclose(h, h.conj().T, atol=1e-12)
        assert numpy.all(generator.eigenphases > -math.pi) and numpy.all(generator.eigenphases <= math.pi)
        assert numpy.max(numpy.abs(scipy.linalg.expm(-1j * h * 2.0 * math.pi / space.lam) - matrix)) < 1e-9


def test_principal_logarithm_other_times():
    space = FockSpace(5, 0.5)
    matrix = scipy.stats.unitary_group.rvs(5, random_state=42)
    h = principal_hamiltonian(TargetUnitary(space, matrix), 3.0).hamiltonian.matrix

    assert numpy.max(numpy.abs(scipy.linalg.expm(-1j * h * 3.0 / 0.5) - matrix)) < 1e-9

    try:
        principal_hamiltonian(TargetUnitary(space, matrix), 0.0)
    except ValueError:
        pass
    else:
        raise AssertionError("zero evolution time accepted")


def test_principal_logarithm_on_branch_cut():
    space = FockSpace(4)
    matrix = numpy.diag([-1.0, 1.0, 1j, -1j]).astype(numpy.complex128)
    generator = principal_hamiltonian(TargetUnitary(space, matrix))

    assert generator.near_branch_cut
    assert numpy.max(numpy.abs(scipy.linalg.expm(-1j * generator.hamiltonian.matrix * 2.0 * math.pi) - matrix)) < 1e-9


def test_branch_cut_snaps_nearby_phases():
    space = FockSpace(3)
    matrix = numpy.diag(numpy.exp(1j * numpy.array([math.pi - 5e-9, 0.3, -1.0])))
    generator = principal_hamiltonian(TargetUnitary(space, matrix))

    assert generator.near_branch_cut
    assert numpy.max(generator.eigenphases) == math.pi
    assert numpy.max(numpy.abs(scipy.linalg.expm(-1j * generator.hamiltonian.matrix * 2.0 * math.pi) - matrix)) <= 1e-8


def test_principal_logarithm_is_idempotent():
    space = FockSpace(6, 0.5)

    for seed in range(10):
        first = principal_hamiltonian(TargetUnitary(space, scipy.stats.unitary_group.rvs(6, random_state=seed))).hamiltonian.matrix
        rebuilt = scipy.linalg.expm(-1j * first * 2.0 * math.pi / space.lam)
        second = principal_hamiltonian(TargetUnitary(space, rebuilt)).hamiltonian.matrix

        assert numpy.allclose(first, second, atol=1e-9)


def test_matched_generator_follows_reference_across_cut():
    h = numpy.diag([0.55, -0.1, 0.2]).astype(numpy.complex128)
    basis = scipy.stats.unitary_group.rvs(3, random_state=8)
    h = basis @ h @ basis.conj().T
    matrix = scipy.linalg.expm(-1j * h * 2.0 * math.pi)

    principal, _, _ = principal_generator(matrix, 2.0 * math.pi, 1.0)
    assert not numpy.allclose(principal, h, atol=1e-3)

    for reference in (h, h + 0.02 * numpy.eye(3)):
        assert numpy.allclose(matched_generator(matrix, reference, 2.0 * math.pi, 1.0), h, atol=1e-10)


def test_target_unitary_rejects_non_unitary():
    try:
        TargetUnitary(FockSpace(2), numpy.array([[1.0, 0.0], [0.0, 1.1]]))
    except ValueError:
        pass
    else:
        raise AssertionError("non-unitary matrix accepted")


def test_gate_fidelity_values():
    assert abs(gate_fidelity(LogicalGate.IDENTITY, LogicalGate.IDENTITY) - 1.0) < 1e-15
    assert abs(gate_fidelity(LogicalGate.PAULI_X, LogicalGate.PAULI_Z) - 1.0 / 3.0) < 1e-15
    assert abs(gate_fidelity(LogicalGate.HADAMARD, -LogicalGate.HADAMARD) - 1.0) < 1e-15


def test_gate_fidelity_is_basis_independent():
    rng = numpy.random.default_rng(31)

    for seed in range(5):
        change = scipy.stats.unitary_group.rvs(3, random_state=seed)
        target = scipy.stats.unitary_group.rvs(3, random_state=100 + seed)
        effective = target @ scipy.linalg.expm(0.1j * numpy.diag(rng.standard_normal(3)))

        rotated = gate_fidelity(change @ target @ change.conj().T, change @ effective @ change.conj().T)
        assert abs(rotated - gate_fidelity(target, effective)) < 1e-12


def test_householder_leaves_complement_fixed():
    space = FockSpace(6)
    u = householder_unitary(fock_state(space, 0), fock_state(space, 1)).matrix

    assert numpy.allclose(u[:, 0], numpy.eye(6)[:, 1], atol=1e-12)
    assert numpy.allclose(u[:, 2:], numpy.eye(6)[:, 2:], atol=1e-12)
    assert numpy.allclose(u[2:, :], numpy.eye(6)[2:, :], atol=1e-12)


def test_logical_gate_names():
    assert numpy.array_equal(logical_gate("random-SU2(7)"), random_su2(7))
    assert numpy.array_equal(logical_gate("random-SU2", seed=7), random_su2(7))
    assert numpy.array_equal(logical_gate("H"), LogicalGate.HADAMARD)

    for name in ("random-SU2", "CNOT"):
        try:
            logical_gate(name)
        except ValueError:
            pass
        else:
            raise AssertionError(f"gate `{name}` accepted")

    gate = random_su2(3)
    assert abs(numpy.linalg.det(gate) - 1.0) < 1e-12
    assert unitarity_defect(gate) < 1e-12
    assert abs(numpy.linalg.det(special_unitary(LogicalGate.HADAMARD)) - 1.0) < 1e-12


def test_embedded_gate_acts_on_code_only():
    space = FockSpace(10)
    code = binomial_code(space)
    ul = random_su2(11)
    u = embed_logical_gate(code, ul)

    assert numpy.allclose(restrict_to_code(u, code.embedding), ul, atol=1e-12)

    outside = numpy.zeros(space.dim, dtype=numpy.complex128)
    outside[1] = 1.0
    outside[9] = 1.0j
    assert numpy.allclose(u.matrix @ outside, outside, atol=1e-12)

    try:
        embed_logical_gate(code, numpy.eye(3))
    except ValueError:
        pass
    else:
        raise AssertionError("3x3 logical gate accepted")


if __name__ == "__main__":
    logging.getLogger().setLevel(level=logging.DEBUG)

    for _name, _test in list(globals().items()):
        if _name.startswith("test_") and callable(_test):
            _test()
            print("passed", _name)
