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


import numpy

from ll_qlg.fock.density_state import DensityState
from ll_qlg.fock.operator_matrix import OperatorMatrix
from ll_qlg.fock.quantum_state import QuantumState

__all__ = ("fidelity_state", "fidelity_density", "expectation")


def _clip_unit(value: float) -> float:
    return min(1.0, max(0.0, value))


def fidelity_state(a: QuantumState, b: QuantumState) -> float:
    if a.space.dim != b.space.dim:
        raise ValueError(f"Dimension mismatch: {a.space.dim} != {b.space.dim}")

    return _clip_unit(abs(complex(numpy.vdot(a.amplitudes, b.amplitudes))) ** 2)


def fidelity_density(rho: DensityState, target: QuantumState) -> float:
    """<target|rho|target>"""
    if rho.space.dim != target.space.dim:
        raise ValueError(f"Dimension mismatch: {rho.space.dim} != {target.space.dim}")

    value = numpy.vdot(target.amplitudes, rho.matrix @ target.amplitudes)
    return _clip_unit(float(numpy.real(value)))


def expectation(operator: OperatorMatrix, state: QuantumState | DensityState) -> complex:
    operator.space.check_same(state.space)

    if isinstance(state, QuantumState):
        return complex(numpy.vdot(state.amplitudes, operator.matrix @ state.amplitudes))

    return complex(numpy.trace(operator.matrix @ state.matrix))
