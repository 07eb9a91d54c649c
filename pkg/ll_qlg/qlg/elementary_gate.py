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


import cmath
import functools
import math
import typing

import numpy
import scipy.linalg

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.fock.operators import plane_wave
from ll_qlg.typed import ComplexArray, RealArray, frozen_array

__all__ = (
    "GATE_CACHE_SIZE",
    "cosine_operator",
    "cosine_eigensystem",
    "elementary_gate",
    "gate_from_eigensystem",
    "free_rotation_phases",
)

GATE_CACHE_SIZE: typing.Final = 10_000


def cosine_operator(space: FockSpace, gamma: float, k: float) -> ComplexArray:
    """cos(k x + gamma) = (e^{i gamma} e^{i k x} + e^{-i gamma} e^{-i k x}) / 2 from padded plane waves."""
    if not k > 0:
        raise ValueError(f"Gate wavenumber must be positive, got {k!r}")

    forward = cmath.exp(1j * gamma) * plane_wave(space, k, 0.0).matrix
    return 0.5 * (forward + forward.conj().T)


@functools.lru_cache(maxsize=GATE_CACHE_SIZE)
def cosine_eigensystem(space: FockSpace, gamma: float, k: float) -> tuple[RealArray, ComplexArray]:
    eigenvalues, eigenvectors = scipy.linalg.eigh(cosine_operator(space, gamma, k))
    return frozen_array(eigenvalues), frozen_array(eigenvectors)


def gate_from_eigensystem(eigenvalues: RealArray, eigenvectors: ComplexArray, theta: float, lam: float) -> ComplexArray:
    phases = numpy.exp(-1j * (theta / lam) * eigenvalues)
    return (eigenvectors * phases) @ eigenvectors.conj().T


@functools.lru_cache(maxsize=GATE_CACHE_SIZE)
def elementary_gate(space: FockSpace, theta: float, gamma: float, k: float) -> OperatorMatrix:
    """exp(-(i / lambda) theta cos(k x + gamma)), memoized on (space, theta, gamma, k)."""
    eigenvalues, eigenvectors = cosine_eigensystem(space, gamma, k)
    return OperatorMatrix(space, gate_from_eigensystem(eigenvalues, eigenvectors, theta, space.lam))


def free_rotation_phases(space: FockSpace, n_t: int) -> ComplexArray:
    """Diagonal of exp(-i n dtau) with dtau = 2 pi / n_t.

    The phase n dtau is reduced modulo 2 pi with integer arithmetic, so a
    single-slice period is exactly the identity.
    """
    levels = numpy.arange(space.dim)
    return numpy.exp(-2j * math.pi * (levels % n_t) / n_t)
