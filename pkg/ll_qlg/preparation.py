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

import numpy

from ll_qlg.codes.code_spec import CodeSpec
from ll_qlg.fock.fidelity import fidelity_state
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.ncft.ncft_kernel_table import NcftKernelTable
from ll_qlg.qlg.floquet_correction import FLOQUET_CORRECTIONS, corrected_drive
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import apply_sequence, propagate
from ll_qlg.synth.gate_fidelity import gate_fidelity
from ll_qlg.synth.householder import householder_unitary
from ll_qlg.synth.logical_gate_embedding import embed_logical_gate
from ll_qlg.synth.logical_gates import special_unitary
from ll_qlg.synth.principal_hamiltonian import PrincipalHamiltonian, principal_hamiltonian
from ll_qlg.synth.target_unitary import TargetUnitary
from ll_qlg.typed import ComplexArray, frozen_array

__all__ = ("PreparationRun", "GateRun", "prepare_state", "prepare_gate")


class PreparationRun:
    __slots__ = ("target", "unitary", "hamiltonian", "pulse", "sequence", "final_state")

    target: QuantumState
    unitary: TargetUnitary
    hamiltonian: PrincipalHamiltonian
    pulse: DrivePulse
    sequence: GateSequence
    final_state: QuantumState

    def __init__(
            self,
            *,
            target: QuantumState,
            unitary: TargetUnitary,
            hamiltonian: PrincipalHamiltonian,
            pulse: DrivePulse,
            sequence: GateSequence,
            final_state: QuantumState
    ):
        self.target = target
        self.unitary = unitary
        self.hamiltonian = hamiltonian
        self.pulse = pulse
        self.sequence = sequence
        self.final_state = final_state

    @property
    def fidelity(self) -> float:
        return fidelity_state(self.final_state, self.target)

    @property
    def infidelity(self) -> float:
        return 1.0 - self.fidelity

    def __repr__(self) -> str:
        return f"PreparationRun({self.sequence!r}, fidelity={self.fidelity!r})"


def prepare_state(
        psi0: QuantumState,
        target: QuantumState,
        *,
        n_t: int,
        n_k: int,
        k_f: float,
        beta0: float = 1.0,
        t: float = 2.0 * math.pi,
        table: NcftKernelTable | None = None,
        corrections: int = FLOQUET_CORRECTIONS
) -> PreparationRun:
    """Householder unitary, principal Hamiltonian, drive pulse, gate fold.

    With ``corrections`` above zero the drive is refined against the folded
    unitary, keeping the pulse with the best preparation fidelity.
    """
    unitary = householder_unitary(psi0, target)
    hamiltonian = principal_hamiltonian(unitary, t)
    initial = numpy.asarray(psi0.amplitudes)
    wanted = numpy.asarray(target.amplitudes).conj()

    def loss(realized: ComplexArray) -> float:
        return 1.0 - float(abs(wanted @ (realized @ initial)) ** 2)

    drive = corrected_drive(hamiltonian.hamiltonian, loss, k_f=k_f, n_k=n_k, n_t=n_t, beta0=beta0, t=t, table=table, corrections=corrections)
    pulse, sequence = drive.pulse, drive.sequence
    final_state = apply_sequence(sequence, psi0)

    run = PreparationRun(
        target=target,
        unitary=unitary,
        hamiltonian=hamiltonian,
        pulse=pulse,
        sequence=sequence,
        final_state=final_state
    )

    logging.debug("prepared target with %s", run)
    return run


class GateRun:
    __slots__ = ("logical_gate", "unitary", "hamiltonian", "pulse", "sequence", "effective_gate")

    logical_gate: ComplexArray
    unitary: TargetUnitary
    hamiltonian: PrincipalHamiltonian
    pulse: DrivePulse
    sequence: GateSequence
    effective_gate: ComplexArray

    def __init__(
            self,
            *,
            logical_gate: ComplexArray,
            unitary: TargetUnitary,
            hamiltonian: PrincipalHamiltonian,
            pulse: DrivePulse,
            sequence: GateSequence,
            effective_gate: ComplexArray
    ):
        self.logical_gate = frozen_array(logical_gate)
        self.unitary = unitary
        self.hamiltonian = hamiltonian
        self.pulse = pulse
        self.sequence = sequence
        self.effective_gate = frozen_array(effective_gate)

    @property
    def fidelity(self) -> float:
        return gate_fidelity(self.logical_gate, self.effective_gate)

    @property
    def gate_error(self) -> float:
        return max(0.0, 1.0 - self.fidelity)

    def __repr__(self) -> str:
        return f"GateRun({self.sequence!r}, fidelity={self.fidelity!r})"


def prepare_gate(
        code: CodeSpec,
        ul: ComplexArray,
        *,
        n_t: int,
        n_k: int,
        k_f: float,
        beta0: float = 1.0,
        t: float = 2.0 * math.pi,
        table: NcftKernelTable | None = None,
        corrections: int = FLOQUET_CORRECTIONS
) -> GateRun:
    """Embedded logical gate, principal Hamiltonian, drive pulse, effective gate Q^dagger U Q."""
    ul = special_unitary(ul)
    unitary = embed_logical_gate(code, ul)
    hamiltonian = principal_hamiltonian(unitary, t)
    q = code.embedding.q

    def loss(realized: ComplexArray) -> float:
        return 1.0 - gate_fidelity(ul, q.conj().T @ realized @ q)

    drive = corrected_drive(hamiltonian.hamiltonian, loss, k_f=k_f, n_k=n_k, n_t=n_t, beta0=beta0, t=t, table=table, corrections=corrections)
    pulse, sequence = drive.pulse, drive.sequence

    effective_gate = q.conj().T @ propagate(sequence, q)

    return GateRun(
        logical_gate=ul,
        unitary=unitary,
        hamiltonian=hamiltonian,
        pulse=pulse,
        sequence=sequence,
        effective_gate=effective_gate
    )
