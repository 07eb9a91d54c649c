import logging
import math

import numpy

from ll_qlg.constants import CALIBRATED_LAMBDA
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.fock.operators import plane_wave
from ll_qlg.ncft.drive_pulse import DrivePulse, principal_angle
from ll_qlg.ncft.kernel import KUMMER_SWITCH, kernel, radial_kernels
from ll_qlg.ncft.kernel_oracle import kernel_oracle
from ll_qlg.ncft.ncft_kernel_table import build_kernel_table, f_target, k_grid, tau_grid
from ll_qlg.ncft.pulse_synthesis import reconstruct_operator, synthesize_pulse


def _random_traceless_hermitian(dim: int, seed: int) -> numpy.ndarray:
    rng = numpy.random.default_rng(seed)
    raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    h = 0.5 * (raw + raw.conj().T)
    h -= numpy.trace(h) / dim * numpy.eye(dim)
    return h / numpy.max(numpy.abs(h))


def test_kernel_matches_oracle():
    rng = numpy.random.default_rng(2024)

    for lam, tuples in ((1.0, 50), (0.5, 10)):
        space = FockSpace(8, lam)

        for _ in range(tuples):
            n, m = (int(level) for level in rng.integers(0, 7, size=2))
            k = float(rng.uniform(0.1, 4.0))
            tau = float(rng.uniform(0.0, 2.0 * math.pi))

            expected = kernel_oracle(space, n, m, k, tau)
            found = kernel(space, n, m, k, tau)

            assert abs(found - expected) <= 1e-5 * abs(expected) + 1e-10, (n, m, k, tau, found, expected)


def test_kernel_is_trace_against_plane_wave():
    space = FockSpace(6)
    k, tau = 1.3, 0.7
    wave = plane_wave(space, -k * math.cos(tau), -k * math.sin(tau)).matrix

    for n in range(6):
        for m in range(6):
            assert abs(kernel(space, n, m, k, tau) - space.lam * wave[m, n]) < 1e-10


def test_kernel_hermitian_symmetry():
    space = FockSpace(10)

    for n, m in ((0, 3), (2, 7), (5, 5), (9, 1)):
        for k in (0.4, 1.9, 2.1, 6.0):
            forward = kernel(space, n, m, k, 0.3)
            mirrored = kernel(space, m, n, k, 0.3 + math.pi)
            assert abs(forward - mirrored.conjugate()) < 1e-12


def test_kernel_continuous_across_series_switch():
    space = FockSpace(12)
    switch_k = math.sqrt(2.0 * KUMMER_SWITCH / space.lam)
    below = radial_kernels(space, numpy.array([switch_k * (1.0 - 1e-9)]))[:, :, 0]
    above = radial_kernels(space, numpy.array([switch_k * (1.0 + 1e-9)]))[:, :, 0]

    assert numpy.allclose(below, above, atol=1e-7)


def test_kernel_rejects_bad_arguments():
    space = FockSpace(4)

    for args in ((0, 0, 0.0, 0.0), (0, 0, -1.0, 0.0), (4, 0, 1.0, 0.0)):
        try:
            kernel(space, *args)
        except ValueError:
            pass
        else:
            raise AssertionError(f"kernel{args!r} accepted")


def test_grids():
    assert numpy.allclose(k_grid(40.0, 40), numpy.arange(1, 41))
    assert abs(tau_grid(64)[-1] - 2.0 * math.pi) < 1e-15
    assert abs(tau_grid(64)[0] - 2.0 * math.pi / 64) < 1e-15

    angles = principal_angle(numpy.array([-math.pi, math.pi, 3.5, -3.5]))
    assert numpy.all(angles > -math.pi) and numpy.all(angles <= math.pi)


def test_f_target_linear_in_operator():
    space = FockSpace(6)
    table = build_kernel_table(space, 10.0, 10, 8)
    first = OperatorMatrix(space, _random_traceless_hermitian(6, 1), hermitian_flag=True)
    second = OperatorMatrix(space, _random_traceless_hermitian(6, 2), hermitian_flag=True)

    combined = f_target(first.scaled(2.0) + second, table)
    assert numpy.allclose(combined, 2.0 * f_target(first, table) + f_target(second, table), atol=1e-12)

    full = table.kernels()
    direct = numpy.einsum("nm,nmkt->kt", first.matrix, full)
    assert numpy.allclose(f_target(first, table), direct, atol=1e-12)


def test_reconstruction_converges_under_refinement():
    space = FockSpace(6)
    h = _random_traceless_hermitian(6, 7)
    operator = OperatorMatrix(space, h, hermitian_flag=True)

    errors = []

    for n_k in (40, 80):
        table = build_kernel_table(space, 40.0, n_k, 32)
        rebuilt = reconstruct_operator(f_target(operator, table), table).matrix
        errors.append(float(numpy.max(numpy.abs(rebuilt - h))))
        assert numpy.allclose(rebuilt, rebuilt.conj().T, atol=1e-10)

    logging.debug("reconstruction errors %s", errors)
    assert errors[1] < 1e-5
    assert errors[1] <= errors[0] + 1e-10


def test_reconstruction_at_sixteen_levels():
    space = FockSpace(16, CALIBRATED_LAMBDA)
    h = _random_traceless_hermitian(16, 16)
    operator = OperatorMatrix(space, h, hermitian_flag=True)

    table = build_kernel_table(space, 40.0, 40, 64)
    rebuilt = reconstruct_operator(f_target(operator, table), table).matrix
    error = float(numpy.max(numpy.abs(rebuilt - h)))

    logging.debug("sixteen level reconstruction error %s", error)
    assert error < 1e-2


def test_synthesized_pulse_shape():
    space = FockSpace(6)
    h = OperatorMatrix(space, _random_traceless_hermitian(6, 3), hermitian_flag=True)
    pulse = synthesize_pulse(h, 20.0, 10, 16, 0.5)

    assert pulse.amplitude.shape == (10, 16)
    assert numpy.all(pulse.amplitude >= 0)
    assert numpy.all(pulse.phase > -math.pi) and numpy.all(pulse.phase <= math.pi)
    assert numpy.all(pulse.envelope == 0.5)

    restored = DrivePulse.from_dict(pulse.get_dict())
    assert numpy.array_equal(restored.amplitude, pulse.amplitude)
    assert numpy.array_equal(restored.phase, pulse.phase)
    assert len(pulse.csv_rows()) == 10 * 16 + 1

    try:
        pulse.with_envelope(numpy.ones(15))
    except ValueError:
        pass
    else:
        raise AssertionError("envelope of wrong length accepted")


if __name__ == "__main__":
    logging.getLogger().setLevel(level=logging.DEBUG)

    for _name, _test in list(globals().items()):
        if _name.startswith("test_") and callable(_test):
            _test()
            print("passed", _name)
