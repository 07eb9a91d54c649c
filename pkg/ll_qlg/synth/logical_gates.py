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
import math
import re
import typing

import numpy

from ll_qlg.typed import ComplexArray

__all__ = ("LogicalGate", "logical_gate", "random_su2", "special_unitary")

_RANDOM_PATTERN: typing.Final = re.compile(r"^random-SU2(?:\((-?\d+)\))?$", re.IGNORECASE)


class LogicalGate:
    __slots__ = ()

    HADAMARD: typing.Final = numpy.array([[1.0, 1.0], [1.0, -1.0]], dtype=numpy.complex128) / math.sqrt(2.0)
    PHASE: typing.Final = numpy.array([[1.0, 0.0], [0.0, 1j]], dtype=numpy.complex128)
    T_GATE: typing.Final = numpy.array([[1.0, 0.0], [0.0, cmath.exp(1j * math.pi / 4.0)]], dtype=numpy.complex128)
    PAULI_X: typing.Final = numpy.array([[0.0, 1.0], [1.0, 0.0]], dtype=numpy.complex128)
    PAULI_Z: typing.Final = numpy.array([[1.0, 0.0], [0.0, -1.0]], dtype=numpy.complex128)
    IDENTITY: typing.Final = numpy.eye(2, dtype=numpy.complex128)

    BY_NAME: typing.Final = {
        "H": HADAMARD,
        "S": PHASE,
        "T": T_GATE,
        "X": PAULI_X,
        "Z": PAULI_Z,
        "I": IDENTITY,
    }


def random_su2(seed: int) -> ComplexArray:
    """Haar-random SU(2) element from a uniformly random unit quaternion."""
    quaternion = numpy.random.default_rng(seed).standard_normal(4)
    quaternion /= numpy.linalg.norm(quaternion)

    a = complex(quaternion[0], quaternion[1])
    b = complex(quaternion[2], quaternion[3])

    return numpy.array([[a, -b.conjugate()], [b, a.conjugate()]], dtype=numpy.complex128)


def logical_gate(name: str, seed: int | None = None) -> ComplexArray:
    """Named single-qubit gate: H, S, T, X, Z, I or ``random-SU2(seed)``."""
    if name in LogicalGate.BY_NAME:
        return LogicalGate.BY_NAME[name].copy()

    match = _RANDOM_PATTERN.match(name)

    if match is None:
        raise ValueError(f"Unknown logical gate `{name}`")

    embedded_seed = match.group(1)

    match (embedded_seed, seed):
        case (None, None):
            raise ValueError("random-SU2 requires a seed")
        case (None, int(explicit)):
            return random_su2(explicit)
        case (str(text), _):
            return random_su2(int(text))

    raise ValueError(f"Unknown logical gate `{name}`")


def special_unitary(gate: ComplexArray) -> ComplexArray:
    """Rescale a 2x2 unitary to unit determinant.

    Keeps logical eigenphases off -1 where the principal logarithm is not
    unique (the Hadamard gate has eigenvalue -1 as given).
    """
    gate = numpy.asarray(gate, dtype=numpy.complex128)
    return gate / numpy.sqrt(complex(numpy.linalg.det(gate)))
