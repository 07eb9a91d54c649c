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

from ll_qlg.codes.code_spec import CodeSpec
from ll_qlg.synth.target_unitary import TargetUnitary, unitarity_defect
from ll_qlg.typed import ComplexArray

__all__ = ("embed_logical_gate",)


def embed_logical_gate(code: CodeSpec, ul: ComplexArray) -> TargetUnitary:
    """Q U_L Q^dagger + (I - P): U_L on the code space, identity elsewhere."""
    ul = numpy.asarray(ul, dtype=numpy.complex128)

    if ul.shape != (2, 2):
        raise ValueError(f"Expected a 2x2 logical gate, found shape {ul.shape!r}")

    defect = unitarity_defect(ul)

    if defect >= 1e-10:
        raise ValueError(f"Logical gate is not unitary (defect {defect:.3e})")

    embedding = code.embedding
    identity = numpy.eye(code.space.dim, dtype=numpy.complex128)
    physical = embedding.q @ ul @ embedding.q.conj().T + (identity - embedding.p)

    return TargetUnitary(code.space, physical)
