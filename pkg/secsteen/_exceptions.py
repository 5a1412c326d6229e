######################################################################
# secsteen: https://github.com/secsteen/secsteen
#
# Copyright: 2024
#
# secsteen is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# secsteen is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with secsteen. If not, see <http://www.gnu.org/licenses/>.
######################################################################

"""Exceptions raised by secsteen computations."""

__author__ = "The secsteen developers"

__all__ = [
    "SecondaryAlgebraError",
    "NonRelationError",
    "NonCycleError",
    "DegreeBoundError",
    "ParseError",
    "RingError",
    "IntegralityError",
]


class SecondaryAlgebraError(Exception):
    """Base class for all domain errors."""


class NonRelationError(SecondaryAlgebraError):
    """An element that should project to zero in A does not."""


class NonCycleError(SecondaryAlgebraError):
    """A Massey bracket that does not lie in the image of A."""


class DegreeBoundError(SecondaryAlgebraError, ValueError):
    """A configured degree or index bound was exceeded."""


class RingError(SecondaryAlgebraError):
    """A symbol was used in a ring that does not contain it."""


class IntegralityError(SecondaryAlgebraError):
    """A rational coefficient has the working prime in its denominator."""


class ParseError(SecondaryAlgebraError):
    """
    A syntax error in an expression.

    The offending character offset is stored in 'position'.
    """

    def __init__(self, msg, position=None):
        self.position = position
        if position is not None:
            msg = f"{msg} (at position {position})"
        super().__init__(msg)
