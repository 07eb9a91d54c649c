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


import typing

import numpy

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.typed import ComplexArray, RealArray

__all__ = ("HAAR_PADDING", "haar_generator", "haar_vector", "sample_haar_state", "fidelity_pdf", "fidelity_cdf")

HAAR_PADDING: typing.Final = 8


def haar_generator(seed: int, index: int) -> numpy.random.Generator:
    """Counter-based stream for sample ``index``; a pure function of (seed, index)."""
    if seed < 0 or index < 0:
        raise ValueError(f"Seed and index must be non-negative, got {seed!r} and {index!r}")

    return numpy.random.Generator(numpy.random.Philox(numpy.random.SeedSequence([seed, index])))


def haar_vector(d: int, seed: int, index: int = 0) -> ComplexArray:
    if d < 2:
        raise ValueError(f"Haar states need d >= 2, got {d!r}")

    rng = haar_generator(seed, index)
    vector = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return vector / numpy.linalg.norm(vector)


def sample_haar_state(d: int, seed: int, *, index: int = 0, space: FockSpace | None = None) -> QuantumState:
    """Haar-random state on the first ``d`` Fock levels, zero beyond.

    Without an explicit space the state lives in ``d + HAAR_PADDING`` levels.
    """
    if space is None:
        space = FockSpace(d + HAAR_PADDING)

    if space.dim < d:
        raise ValueError(f"Fock space of dimension {space.dim} cannot hold a {d}-level state")

    amplitudes = numpy.zeros(space.dim, dtype=numpy.complex128)
    amplitudes[:d] = haar_vector(d, seed, index)
    return QuantumState(space, amplitudes)


def fidelity_pdf(fidelity: RealArray | float, d: int) -> RealArray:
    """(d - 1)(1 - F)^(d - 2), the density of |<phi|psi>|^2 for Haar psi."""
    values = numpy.asarray(fidelity, dtype=numpy.float64)
    return (d - 1) * (1.0 - values) ** (d - 2)


def fidelity_cdf(fidelity: RealArray | float, d: int) -> RealArray:
    values = numpy.clip(numpy.asarray(fidelity, dtype=numpy.float64), 0.0, 1.0)
    return 1.0 - (1.0 - values) ** (d - 1)
