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



from ll_qlg.codes.code_spec import CodeKind, CodeSpec
from ll_qlg.codes.codewords import binomial_code, cat_code, gkp_code
from ll_qlg.codes.knill_laflamme import kl_check
from ll_qlg.constants import CALIBRATED_LAMBDA, QlgPreset, VERSION
from ll_qlg.fock.density_state import DensityState
from ll_qlg.fock.fidelity import fidelity_state
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.quantum_state import QuantumState
from ll_qlg.fock.wigner import wigner
from ll_qlg.haar.benchmark import DepthScan, HaarBenchmarkReport, benchmark, depth_scan
from ll_qlg.haar.sampling import sample_haar_state
from ll_qlg.ncft.drive_pulse import DrivePulse
from ll_qlg.ncft.kernel import kernel
from ll_qlg.ncft.kernel_oracle import kernel_oracle
from ll_qlg.ncft.ncft_kernel_table import NcftKernelTable, f_target
from ll_qlg.ncft.pulse_synthesis import synthesize_pulse
from ll_qlg.noise.coherent_bound import coherent_bound
from ll_qlg.noise.amplitude_noise import noisy_envelope
from ll_qlg.noise.lindblad import lindblad_evolve
from ll_qlg.noise.noise_config import NoiseConfig
from ll_qlg.ope.optimization_problem import OptimizationProblem
from ll_qlg.ope.optimization_result import OptimizationResult
from ll_qlg.ope.optimizer import optimize, loss
from ll_qlg.preparation import prepare_gate, prepare_state
from ll_qlg.qlg.compiler import compile_pulse
from ll_qlg.qlg.elementary_gate import elementary_gate
from ll_qlg.qlg.floquet_correction import corrected_drive
from ll_qlg.qlg.gate_sequence import GateSequence
from ll_qlg.qlg.simulator import apply_sequence, sequence_unitary
from ll_qlg.simulation_error import SimulationError
from ll_qlg.synth.gate_fidelity import gate_fidelity
from ll_qlg.synth.householder import householder_unitary
from ll_qlg.synth.logical_embedding import LogicalEmbedding
from ll_qlg.synth.logical_gate_embedding import embed_logical_gate
from ll_qlg.synth.principal_hamiltonian import principal_hamiltonian
from ll_qlg.synth.target_unitary import TargetUnitary

__all__ = (
    "VERSION",
    "CALIBRATED_LAMBDA",
    "QlgPreset",
    "SimulationError",
    "FockSpace",
    "QuantumState",
    "DensityState",
    "fidelity_state",
    "wigner",
    "NcftKernelTable",
    "DrivePulse",
    "kernel",
    "kernel_oracle",
    "f_target",
    "synthesize_pulse",
    "TargetUnitary",
    "LogicalEmbedding",
    "householder_unitary",
    "principal_hamiltonian",
    "embed_logical_gate",
    "gate_fidelity",
    "GateSequence",
    "compile_pulse",
    "elementary_gate",
    "corrected_drive",
    "apply_sequence",
    "sequence_unitary",
    "CodeKind",
    "CodeSpec",
    "binomial_code",
    "cat_code",
    "gkp_code",
    "kl_check",
    "OptimizationProblem",
    "OptimizationResult",
    "optimize",
    "loss",
    "NoiseConfig",
    "lindblad_evolve",
    "coherent_bound",
    "noisy_envelope",
    "HaarBenchmarkReport",
    "sample_haar_state",
    "benchmark",
    "DepthScan",
    "depth_scan",
    "prepare_state",
    "prepare_gate"
)
