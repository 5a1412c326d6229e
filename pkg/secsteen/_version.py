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

"""Static version information."""

_VERSION = "0.1.0"


def get_versions():
    """The version record, in the layout of a versioneer record."""
    return {
        "version": _VERSION,
        "full-revisionid": None,
        "dirty": False,
        "error": None,
        "date": None,
    }
