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
import scipy.linalg

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.synth.degenerate_code_error import DegenerateCodeError
from ll_qlg.synth.target_unitary import TargetUnitary
from ll_qlg.typed import ComplexArray, frozen_array

__all__ = ("LogicalEmbedding", "restrict_to_code")


class LogicalEmbedding:
    """Orthonormalized logical basis Q = C G^(-1/2) of a pair of codewords."""

    __slots__ = ("space", "q", "p")

    GRAM_FLOOR: typing.Final = 1e-8

    space: FockSpace
    q: ComplexArray
    p: ComplexArray

    def __init__(self, zero: QuantumState, one: QuantumState):
        zero.space.check_same(one.space)

        codewords = numpy.stack((zero.amplitudes, one.amplitudes), axis=1)
        gram = codewords.conj().T @ codewords

        eigenvalues, eigenvectors = scipy.linalg.eigh(gram)

        if eigenvalues[0] < LogicalEmbedding.GRAM_FLOOR:
            raise DegenerateCodeError(float(eigenvalues[0]), LogicalEmbedding.GRAM_FLOOR)

        inverse_sqrt = (eigenvectors / numpy.sqrt(eigenvalues)) @ eigenvectors.conj().T
        q = codewords @ inverse_sqrt

        self.space = zero.space
        self.q = frozen_array(q)
        self.p = frozen_array(q @ q.conj().T)


def restrict_to_code(matrix: ComplexArray | TargetUnitary, embedding: LogicalEmbedding) -> ComplexArray:
    """Q^dagger M Q"""
    if isinstance(matrix, TargetUnitary):
        matrix = matrix.matrix

    return embedding.q.conj().T @ matrix @ embedding.q
