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

from ll_qlg.typed import ComplexArray, RealArray, JsonDict

__all__ = (
    "encode_complex",
    "decode_complex",
    "encode_real",
    "decode_real",
    "check_constructor",
)


def encode_complex(array: ComplexArray) -> typing.Any:
    """Nested lists with every complex entry written as an ``[re, im]`` pair."""
    pairs = numpy.stack((array.real, array.imag), axis=-1)
    return pairs.tolist()


def decode_complex(data: typing.Any) -> ComplexArray:
    pairs = numpy.asarray(data, dtype=numpy.float64)

    if pairs.ndim == 0 or pairs.shape[-1] != 2:
        raise ValueError(f"Expected trailing [re, im] pairs, found shape `{pairs.shape!r}`")

    return typing.cast(ComplexArray, pairs[..., 0] + 1j * pairs[..., 1])


def encode_real(array: RealArray) -> typing.Any:
    return numpy.asarray(array, dtype=numpy.float64).tolist()


def decode_real(data: typing.Any) -> RealArray:
    return numpy.asarray(data, dtype=numpy.float64)


def check_constructor(data: JsonDict, expected: str) -> None:
    found = data.get("_cons")

    if found != expected:
        raise TypeError(f"Expected `{expected}` Found `{found!r}`")
