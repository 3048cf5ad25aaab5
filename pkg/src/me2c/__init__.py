# Copyright 2026 The me2c developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""me2c approximates maximum edge 2-colorings.

An edge 2-coloring colors every edge so that no vertex sees more than two
colors. me2c looks for one with many colors: it normalizes the graph with a
handful of optimum-preserving rewrites, colors the result from a maximum
matching, lifts the coloring back and certifies how far it can be from the
optimum.

.. seealso::
    See the :doc:`/architecture` document for an overview of how these pieces
    fit together.


Reference
---------------------------------------------------------------------------


.. rubric:: The Facade

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.Solver
    ~me2c.RunReport
    ~me2c.solve


.. rubric:: Graphs and Colorings

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.graph
    ~me2c.matching
    ~me2c.coloring
    ~me2c.generators


.. rubric:: Normalization and Certificates

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.rewrite
    ~me2c.normalize
    ~me2c.certify
    ~me2c.pipeline
    ~me2c.oracle


.. rubric:: Configuration and Errors

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.Config
    ~me2c.errors


.. rubric:: Miscellanea

.. autosummary::
    :toctree:
    :nosignatures:

    __version__
"""

from __future__ import annotations

import logging

try:
    from importlib import metadata
    from importlib.metadata import PackageNotFoundError
except ImportError:
    import importlib_metadata as metadata  # type: ignore[no-redef]
    from importlib_metadata import PackageNotFoundError  # type: ignore[no-redef]


logger = logging.getLogger(__name__)


# Re-exports
# ---------------------------------------------------------------------------

from .coloring import EdgeColoring
from .config import Config
from .facade import RunReport, Solver
from .graph import Graph
from .normalize import Strategy
from .pipeline import solve


# Misc
# ---------------------------------------------------------------------------


def _version():
    """Read the version string from the package metadata."""
    try:
        return metadata.version("me2c")
    except PackageNotFoundError:
        return "0.0.0"


#: The version string.
#:
#: The version string is read from the package metadata when the package is
#: initialized. It is "0.0.0" when the package is imported straight from the
#: source tree.
__version__ = _version()
