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


import concurrent.futures
import typing

import numpy
import numpy.typing

__all__ = (
    "ComplexArray",
    "RealArray",
    "IntArray",
    "JsonDict",
    "parallel_map",
    "frozen_array",
)

ComplexArray = numpy.typing.NDArray[numpy.complex128]

RealArray = numpy.typing.NDArray[numpy.float64]

IntArray = numpy.typing.NDArray[numpy.int64]

JsonDict = dict[str, typing.Any]

_MapArgType = typing.TypeVar("_MapArgType")
_MapRetType = typing.TypeVar("_MapRetType")


def parallel_map(
        executor: concurrent.futures.Executor | None,
        target: typing.Callable[[_MapArgType], _MapRetType],
        arguments: typing.Iterable[_MapArgType]
) -> list[_MapRetType]:
    if executor is None:
        return [target(argument) for argument in arguments]

    futures = [executor.submit(target, argument) for argument in arguments]
    return [future.result() for future in futures]


_ArrayType = typing.TypeVar("_ArrayType", bound=numpy.ndarray[typing.Any, typing.Any])


def frozen_array(array: _ArrayType) -> _ArrayType:
    result = array.copy()
    result.flags.writeable = False
    return result
