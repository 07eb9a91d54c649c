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
import logging
import math
import typing

import numpy

from ll_qlg.codes.code_spec import CodeKind, CodeSpec
from ll_qlg.codes.insufficient_dimension_error import InsufficientDimensionError
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operators import displacement_elements
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.typed import ComplexArray

__all__ = (
    "CAT_SWEET_SPOT",
    "GKP_DEFAULT_SIGMA",
    "GKP_DEFAULT_RANGE",
    "binomial_code",
    "cat_code",
    "cat_norm_squared",
    "cat_unnormalized",
    "gkp_code",
    "gkp_unnormalized",
    "custom_code",
    "code_by_name",
)

CAT_SWEET_SPOT: typing.Final = 2.3447

GKP_DEFAULT_SIGMA: typing.Final = 0.35

GKP_DEFAULT_RANGE: typing.Final = 8

# Largest fraction of a GKP codeword's weight allowed in the padding levels.
GKP_LEAKAGE_LIMIT: typing.Final = 1e-2


def _truncated_state(space: FockSpace, padded: ComplexArray) -> QuantumState:
    return QuantumState.from_amplitudes(space, padded[:space.dim], normalize=True)


def binomial_code(space: FockSpace) -> CodeSpec:
    if space.dim < 7:
        raise InsufficientDimensionError(space.dim, 7, "binomial codewords occupy levels up to |6>")

    zero = numpy.zeros(space.dim, dtype=numpy.complex128)
    zero[0] = 0.5
    zero[4] = math.sqrt(3.0) / 2.0

    one = numpy.zeros(space.dim, dtype=numpy.complex128)
    one[2] = math.sqrt(3.0) / 2.0
    one[6] = 0.5

    return CodeSpec(
        kind=CodeKind.BINOMIAL,
        space=space,
        params={},
        zero_l=QuantumState(space, zero),
        one_l=QuantumState(space, one)
    )


def cat_norm_squared(alpha: float, logical: int) -> float:
    """N_m = 8 exp(-alpha^2) [cosh(alpha^2) + (-1)^m cos(alpha^2)]"""
    x = alpha * alpha
    sign = 1.0 if logical == 0 else -1.0
    return 8.0 * math.exp(-x) * (math.cosh(x) + sign * math.cos(x))


def cat_unnormalized(space: FockSpace, alpha: float, logical: int) -> ComplexArray:
    """Sum over the four legs i^k alpha with signs (-1)^(m k), in the padded space."""
    levels = space.padded_dim
    result = numpy.zeros(levels, dtype=numpy.complex128)

    for leg in range(4):
        sign = (-1.0) ** (logical * leg)
        result += sign * displacement_elements(levels, alpha * (1j ** leg))[:, 0]

    return result


def cat_code(space: FockSpace, alpha: float = CAT_SWEET_SPOT) -> CodeSpec:
    required = math.ceil(alpha * alpha + 6.0 * alpha + 10.0)

    if space.dim < required:
        raise InsufficientDimensionError(space.dim, required, f"cat legs with alpha={alpha} are truncated")

    return CodeSpec(
        kind=CodeKind.CAT,
        space=space,
        params={"alpha": float(alpha)},
        zero_l=_truncated_state(space, cat_unnormalized(space, alpha, 0)),
        one_l=_truncated_state(space, cat_unnormalized(space, alpha, 1))
    )


def gkp_unnormalized(space: FockSpace, sigma: float, n_range: int, logical: int) -> ComplexArray:
    """Gaussian-weighted displaced vacua on the lattice sqrt(pi/2) (2 n1 + mu) + i sqrt(pi/2) n2."""
    levels = space.padded_dim
    spacing = math.sqrt(math.pi / 2.0)
    result = numpy.zeros(levels, dtype=numpy.complex128)

    for n1 in range(-n_range, n_range + 1):
        for n2 in range(-n_range, n_range + 1):
            alpha = complex(spacing * (2 * n1 + logical), spacing * n2)
            weight = math.exp(-sigma * sigma * abs(alpha) ** 2) * cmath.exp(-1j * alpha.real * alpha.imag)
            result += weight * displacement_elements(levels, alpha)[:, 0]

    return result


def gkp_code(space: FockSpace, sigma: float = GKP_DEFAULT_SIGMA, n_range: int = GKP_DEFAULT_RANGE) -> CodeSpec:
    if not 0.0 < sigma <= 1.0:
        raise ValueError(f"GKP width must lie in (0, 1], got {sigma!r}")

    if n_range < 3:
        raise ValueError(f"GKP lattice range must be at least 3, got {n_range!r}")

    codewords = []

    for logical in (0, 1):
        padded = gkp_unnormalized(space, sigma, n_range, logical)
        total = float(numpy.sum(numpy.abs(padded) ** 2))
        leaked = float(numpy.sum(numpy.abs(padded[space.dim:]) ** 2)) / total

        logging.debug("gkp codeword %d at sigma=%s leaks %s of its weight above dim %d", logical, sigma, leaked, space.dim)

        if leaked > GKP_LEAKAGE_LIMIT:
            raise InsufficientDimensionError(space.dim, None, f"GKP codeword {logical} at sigma={sigma} leaks {leaked:.2e} of its weight")

        codewords.append(_truncated_state(space, padded))

    return CodeSpec(
        kind=CodeKind.GKP,
        space=space,
        params={"sigma": float(sigma), "n_range": int(n_range)},
        zero_l=codewords[0],
        one_l=codewords[1]
    )


def custom_code(space: FockSpace, zero: typing.Any, one: typing.Any) -> CodeSpec:
    return CodeSpec(
        kind=CodeKind.CUSTOM,
        space=space,
        params={},
        zero_l=QuantumState.from_amplitudes(space, zero, normalize=True),
        one_l=QuantumState.from_amplitudes(space, one, normalize=True)
    )


def code_by_name(name: str, space: FockSpace, *, alpha: float | None = None, sigma: float | None = None, n_range: int | None = None) -> CodeSpec:
    match CodeKind(name.lower()):
        case CodeKind.BINOMIAL:
            return binomial_code(space)
        case CodeKind.CAT:
            return cat_code(space, CAT_SWEET_SPOT if alpha is None else alpha)
        case CodeKind.GKP:
            return gkp_code(space, GKP_DEFAULT_SIGMA if sigma is None else sigma, GKP_DEFAULT_RANGE if n_range is None else n_range)
        case _:
            raise ValueError(f"Code `{name}` cannot be built by name")
