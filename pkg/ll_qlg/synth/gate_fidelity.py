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

from ll_qlg.typed import ComplexArray

__all__ = ("gate_fidelity",)


def gate_fidelity(g_tar: ComplexArray, g_eff: ComplexArray) -> float:
    """Average gate fidelity (|Tr(G_tar^dagger G_eff)|^2 + d) / (d (d + 1))."""
    g_tar = numpy.asarray(g_tar, dtype=numpy.complex128)
    g_eff = numpy.asarray(g_eff, dtype=numpy.complex128)

    if g_tar.shape != g_eff.shape or g_tar.ndim != 2 or g_tar.shape[0] != g_tar.shape[1]:
        raise ValueError(f"Expected square matrices of equal shape, found {g_tar.shape!r} and {g_eff.shape!r}")

    d = g_tar.shape[0]
    overlap = abs(complex(numpy.trace(g_tar.conj().T @ g_eff))) ** 2
    return float((overlap + d) / (d * (d + 1)))
