import logging
import math

import numpy

from ll_qlg.fock.density_state import DensityState
from ll_qlg.fock.fidelity import fidelity_density, fidelity_state
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.fock.states import coherent_state, fock_state, vacuum
from ll_qlg.noise.amplitude_noise import noisy_envelope, noisy_sequence
from ll_qlg.noise.coherent_bound import coherent_bound, photon_number_trajectory
from ll_qlg.noise.lindblad import lindblad_evolve, slice_hamiltonian
from ll_qlg.noise.noise_config import NoiseConfig, SliceMode
from ll_qlg.noise.sweeps import sweep_csv_rows, sweep_kappa, sweep_zeta
from ll_qlg.preparation import prepare_state
from ll_qlg.qlg.compiler import compile_pulse
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import apply_sequence, slice_operator

space = FockSpace(8)
target = QuantumState.from_amplitudes(space, [0.5, 0.0, 0.6, 0.3j, 0.0, 0.2, 0.0, 0.1], normalize=True)
prepared = prepare_state(vacuum(space), target, n_t=8, n_k=8, k_f=20.0)


def _idle_sequence(fock: FockSpace, n_t: int) -> GateSequence:
    return GateSequence(
        space=fock,
        theta=numpy.zeros(n_t),
        gamma=numpy.zeros(n_t),
        k=numpy.ones(n_t),
        n_t=n_t,
        n_k=1,
        k_f=1.0,
        beta0=0.0
    )


def test_lossless_evolution_matches_fold():
    psi = apply_sequence(prepared.sequence, vacuum(space)).amplitudes
    rho = lindblad_evolve(prepared.sequence, DensityState.from_pure(vacuum(space)), NoiseConfig())

    assert numpy.max(numpy.abs(rho.matrix - numpy.outer(psi, psi.conj()))) < 1e-8


def test_slice_hamiltonian_generates_slice_gates():
    seq = prepared.sequence
    index = 3
    generator = slice_hamiltonian(seq, index)
    energies, vectors = numpy.linalg.eigh(generator)
    gates = (vectors * numpy.exp(-1j * energies * seq.dtau / space.lam)) @ vectors.conj().T

    rotation = numpy.exp(-2j * math.pi * numpy.arange(space.dim) / seq.n_t)
    assert numpy.allclose(gates * rotation[None, :], slice_operator(seq, index), atol=1e-10)

    summed = slice_hamiltonian(seq, index, SliceMode.GATE_SUM)
    assert numpy.allclose(summed, summed.conj().T, atol=1e-12)


def test_free_decay_of_photon_number():
    fock = FockSpace(14)
    kappa = 0.05
    psi0 = coherent_state(fock, 1.0)
    rho = lindblad_evolve(_idle_sequence(fock, 8), DensityState.from_pure(psi0), NoiseConfig(kappa=kappa))

    expected = psi0.mean_photon_number() * math.exp(-2.0 * math.pi * kappa)
    assert abs(rho.mean_photon_number() - expected) < 1e-6 * expected


def test_vacuum_is_a_fixed_point():
    fock = FockSpace(6)
    rho = lindblad_evolve(_idle_sequence(fock, 8), DensityState.from_pure(vacuum(fock)), NoiseConfig(kappa=0.3))

    assert numpy.allclose(rho.matrix, numpy.outer(numpy.eye(6)[0], numpy.eye(6)[0]), atol=1e-12)


def test_fock_decay_saturates_coherent_bound():
    fock = FockSpace(6)
    seq = _idle_sequence(fock, 8)
    psi0 = fock_state(fock, 2)

    for kappa in (0.01, 0.05):
        rho = lindblad_evolve(seq, DensityState.from_pure(psi0), NoiseConfig(kappa=kappa))
        bound = coherent_bound(seq, psi0, kappa)

        assert abs(bound - math.exp(-4.0 * math.pi * kappa)) < 1e-12
        assert abs(fidelity_density(rho, psi0) - bound) < 1e-8


def test_infidelity_grows_with_loss_rate():
    fock = FockSpace(6)
    seq = _idle_sequence(fock, 8)
    psi0 = fock_state(fock, 3)

    rows = sweep_kappa(seq, psi0, psi0, [0.0, 1e-3, 1e-2, 1e-1])
    infidelities = [row.mean_infidelity for row in rows]

    assert abs(infidelities[0]) < 1e-12
    assert all(later > earlier for earlier, later in zip(infidelities, infidelities[1:]))
    assert rows[0].bound == 0.0
    assert all(row.failures == 0 and row.n_samples == 1 for row in rows)


def test_channel_is_linear_and_positive():
    cfg = NoiseConfig(kappa=0.02)
    first = DensityState.from_pure(vacuum(space))
    second = DensityState.from_pure(target)
    mixed = DensityState(space, 0.5 * (first.matrix + second.matrix))

    outputs = [lindblad_evolve(prepared.sequence, rho, cfg) for rho in (first, second, mixed)]

    assert numpy.allclose(outputs[2].matrix, 0.5 * (outputs[0].matrix + outputs[1].matrix), atol=1e-10)
    assert all(output.min_eigenvalue() >= -1e-8 for output in outputs)
    assert all(abs(numpy.trace(output.matrix) - 1.0) < 1e-10 for output in outputs)


def test_gate_sum_mode_keeps_a_valid_state():
    cfg = NoiseConfig(kappa=0.01, dt_substeps=2, slice_mode=SliceMode.GATE_SUM)
    rho = lindblad_evolve(prepared.sequence, DensityState.from_pure(vacuum(space)), cfg)

    assert rho.min_eigenvalue() >= -1e-8
    assert 0.0 <= fidelity_density(rho, target) <= 1.0


def test_photon_number_trajectory():
    seq = prepared.sequence
    photons = photon_number_trajectory(seq, vacuum(space))

    assert photons.size == seq.n_t + 1
    assert photons[0] == 0.0
    assert abs(photons[-1] - prepared.final_state.mean_photon_number()) < 1e-10
    assert coherent_bound(seq, vacuum(space), 0.0) == 1.0

    try:
        coherent_bound(seq, vacuum(space), -1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("negative loss rate accepted")


def test_noisy_envelope_statistics():
    beta = numpy.linspace(0.5, 1.5, 64)
    assert numpy.array_equal(noisy_envelope(beta, 0.0, 3), beta)
    assert numpy.array_equal(noisy_envelope(beta, 0.2, 3), noisy_envelope(beta, 0.2, 3))
    assert not numpy.array_equal(noisy_envelope(beta, 0.2, 3), noisy_envelope(beta, 0.2, 4))

    draws = 100_000
    zeta = 0.1
    perturbation = noisy_envelope(numpy.zeros(draws), zeta, 11)
    sigma = zeta / math.sqrt(2.0 * math.pi / draws)

    assert abs(float(numpy.mean(perturbation))) < 4.0 * sigma / math.sqrt(draws)
    assert abs(float(numpy.std(perturbation)) / sigma - 1.0) < 0.02


def test_zeta_sweep():
    pulse = prepared.pulse
    rows = sweep_zeta(pulse, vacuum(space), target, [0.0, 0.05], seeds=3)

    assert rows[0].n_samples == 3 and rows[0].std == 0.0
    assert abs(rows[0].mean_infidelity - prepared.infidelity) < 1e-12
    assert rows[1].n_samples == 3 and rows[1].failures == 0

    samples = [
        1.0 - fidelity_state(apply_sequence(noisy_sequence(pulse, NoiseConfig(zeta=0.05, seed=seed)), vacuum(space)), target)
        for seed in range(3)
    ]
    assert abs(float(numpy.mean(samples)) - rows[1].mean_infidelity) < 1e-12
    assert noisy_sequence(pulse, NoiseConfig()).theta.tolist() == compile_pulse(pulse).theta.tolist()

    table = sweep_csv_rows(rows, "zeta")
    assert table[0] == ["zeta", "mean_infidelity", "std", "n_samples", "bound", "failures"]
    assert len(table) == 3 and table[1][4] == ""


def test_noise_config_validation():
    for kwargs in ({"kappa": -1.0}, {"zeta": -0.1}, {"dt_substeps": 0}):
        try:
            NoiseConfig(**kwargs)
        except ValueError:
            pass
        else:
            raise AssertionError(f"NoiseConfig({kwargs!r}) accepted")

    cfg = NoiseConfig(kappa=0.1, zeta=0.2, seed=3, dt_substeps=6, slice_mode=SliceMode.GATE_SUM)
    assert NoiseConfig.from_dict(cfg.get_dict()).get_dict() == cfg.get_dict()


if __name__ == "__main__":
    logging.getLogger().setLevel(level=logging.DEBUG)

    for _name, _test in list(globals().items()):
        if _name.startswith("test_") and callable(_test):
            _test()
            print("passed", _name)
