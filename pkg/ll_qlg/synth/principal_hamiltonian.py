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


import logging
import math
import typing

import numpy
import scipy.linalg

from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.synth.target_unitary import TargetUnitary
from ll_qlg.typed import ComplexArray, RealArray, frozen_array

__all__ = ("PrincipalHamiltonian", "principal_hamiltonian", "principal_generator", "matched_generator")

BRANCH_CUT_MARGIN: typing.Final = 1e-8


class PrincipalHamiltonian:
    __slots__ = ("hamiltonian", "eigenphases", "near_branch_cut")

    hamiltonian: OperatorMatrix
    eigenphases: RealArray
    near_branch_cut: bool

    def __init__(self, hamiltonian: OperatorMatrix, eigenphases: RealArray, near_branch_cut: bool):
        self.hamiltonian = hamiltonian
        self.eigenphases = frozen_array(eigenphases)
        self.near_branch_cut = near_branch_cut

    def __repr__(self) -> str:
        return f"PrincipalHamiltonian({self.hamiltonian!r}, near_branch_cut={self.near_branch_cut})"


def principal_generator(matrix: ComplexArray, duration: float, lam: float) -> tuple[ComplexArray, RealArray, bool]:
    """Hermitian H with exp(-i H duration / lam) = matrix, eigenphases in (-pi, pi].

    Phases within BRANCH_CUT_MARGIN of the cut are placed at +pi and
    reported through the returned flag. This snaps the phase itself, so
    exp(-i H duration / lam) can differ from ``matrix`` by up to
    BRANCH_CUT_MARGIN in operator norm.
    """
    schur_form, schur_vectors = scipy.linalg.schur(matrix, output="complex")
    eigenvalues = numpy.diag(schur_form)

    phases = -numpy.angle(eigenvalues)
    near_cut = numpy.abs(phases) >= math.pi - BRANCH_CUT_MARGIN
    phases = numpy.where(near_cut, math.pi, phases)

    generator = (schur_vectors * (phases * (lam / duration))) @ schur_vectors.conj().T
    generator = 0.5 * (generator + generator.conj().T)

    return generator, phases, bool(numpy.any(near_cut))


def matched_generator(matrix: ComplexArray, reference: ComplexArray, duration: float, lam: float) -> ComplexArray:
    """Hermitian H with exp(-i H duration / lam) = matrix on the branch closest to ``reference``.

    Each eigenphase is shifted by a multiple of 2 pi towards the expectation
    value of ``reference`` in its eigenvector, so a unitary close to
    exp(-i reference duration / lam) gives a generator close to ``reference``
    even across the cut.
    """
    schur_form, schur_vectors = scipy.linalg.schur(matrix, output="complex")
    phases = -numpy.angle(numpy.diag(schur_form))

    expected = numpy.real(numpy.einsum("ij,ik,kj->j", schur_vectors.conj(), reference, schur_vectors)) * (duration / lam)
    phases = phases + 2.0 * math.pi * numpy.round((expected - phases) / (2.0 * math.pi))

    generator = (schur_vectors * (phases * (lam / duration))) @ schur_vectors.conj().T
    return 0.5 * (generator + generator.conj().T)


def principal_hamiltonian(u: TargetUnitary, t: float = 2.0 * math.pi) -> PrincipalHamiltonian:
    if not t > 0:
        raise ValueError(f"Evolution time must be positive, got {t!r}")

    space: FockSpace = u.space
    generator, phases, near_cut = principal_generator(u.matrix, t, space.lam)

    if near_cut:
        logging.info("principal hamiltonian has eigenphases on the branch cut, kept at +pi")

    return PrincipalHamiltonian(OperatorMatrix(space, generator, hermitian_flag=True), phases, near_cut)
