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

# Note that this file only exposes the version. The algebras, the parser
# and SecondaryEngine should be imported from their respective
# sub-modules, which keeps start up of the command-line tool cheap for
# commands that need only part of the machinery.

from ._version import get_versions

__version__ = get_versions()["version"]
del get_versions
