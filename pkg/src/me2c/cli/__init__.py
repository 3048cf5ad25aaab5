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

"""The ``me2c`` command line interface.

The me2c CLI is built from command objects. Command objects are regular
functions annotated with the `@command <command>` decorator. Their docstrings
are written in `docopt <http://docopt.org>`_ format, which is used to generate
the argv parser.

Exit codes are fixed: 0 for success, 2 when a graph does not meet a
precondition, 3 when an input file does not parse and 4 when a self-check
fails. See `me2c.errors`.


Custom Commands
---------------------------------------------------------------------------

Any Python package may provide a command. To register a new command with
me2c, a package provides an `entry point <entry_point_>`_ in the ``me2c_cli``
namespace pointing to the `command` object.

.. _entry_point: https://setuptools.pypa.io/en/latest/userguide/entry_point.html

.. rubric:: Example

.. code:: python

    # Module: examplepkg.degrees

    from me2c.cli import command
    from me2c.config import Config
    from me2c.graph import Graph

    @command
    def degrees(args: Dict[str, Any], config: Config) -> int:
        \"""Print the degree sequence of a graph.

        Usage:
            me2c degrees <graph>
            me2c degrees --help

        Options:
            -h, --help    Print this help message and exit.
        \"""
        g = Graph.from_path(Path(args['<graph>']))
        print(*g.degrees())
        return 0

.. code:: toml

    # File: pyproject.toml

    [project.entry-points.me2c_cli]
    degrees = 'examplepkg.degrees:degrees'


Reference
---------------------------------------------------------------------------

.. rubric:: Entry Point

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.cli.main


.. rubric:: Commands

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.cli.bench
    ~me2c.cli.exact
    ~me2c.cli.gen
    ~me2c.cli.normalize
    ~me2c.cli.solve
    ~me2c.cli.verify


.. rubric:: Command Utilities

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.cli.command
    ~me2c.cli.all_commands
"""

from __future__ import annotations

import functools
import logging
import sys
import textwrap
from inspect import cleandoc
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO

from docopt import docopt

from me2c.strategies import entry_points


logger = logging.getLogger(__name__)


#: The entry point group commands register under.
ENTRY_POINT_GROUP = "me2c_cli"


# CLI Infrastructure
# ---------------------------------------------------------------------------


def _fixup_docstring(obj: Any) -> str:
    """Rewrap a docopt docstring as reStructuredText for Sphinx."""
    doc = obj.__doc__
    first_line = doc.splitlines()[0]
    new_doc = first_line + "\n\n"
    new_doc += ".. code:: text\n\n"
    new_doc += textwrap.indent(cleandoc(doc), "     ")
    new_doc += "\n"
    return new_doc


def _command_summary() -> str:
    """Generate summary documentation for all commands.

    The summary is appended to the help message of `main`.
    """
    commands = sorted((name, cmd.summary) for name, cmd in all_commands().items())
    longest_name = max((len(name) for name, _ in commands), default=0)

    doc = "Commands:\n"
    for name, summary in commands:
        doc += "    " + name.ljust(longest_name + 4) + summary + "\n"
    return doc


def _builtin_commands() -> Dict[str, command]:
    return {
        "bench": bench,
        "exact": exact,
        "gen": gen,
        "normalize": normalize,
        "solve": solve,
        "verify": verify,
    }


def all_commands() -> Dict[str, command]:
    """Get the set of all commands.

    Falls back to the builtin commands when no entry points are installed.

    Returns:
        Dict[str, command]: A mapping from name to command object.
    """
    # A name registered twice, for example by a third-party package shadowing
    # a builtin command, is dropped.
    commands: Dict[str, command] = {}
    duplicates = set()
    for ep in entry_points(ENTRY_POINT_GROUP):
        if ep.name in commands or ep.name in duplicates:
            logger.warning(f"duplicate definition of subcommand: {ep.name}")
            commands.pop(ep.name, None)
            duplicates.add(ep.name)
        else:
            commands[ep.name] = ep.load()

    if not commands and not duplicates:
        commands = _builtin_commands()
    return commands


def get_command(name: str) -> command:
    """Get a command by name.

    Raises:
        KeyError: No such command.
    """
    commands = all_commands()
    if name not in commands:
        raise KeyError(f"no such command: {name}")
    return commands[name]


class command:
    """A decorator for CLI command functions.

    All commands take an argument dictionary as their first argument and a
    `~me2c.config.Config` as a keyword argument. They return an integer exit
    code. Library errors propagate; `main` turns them into exit codes.

    When calling a command object, you may pass a list of strings instead of
    an argument dict. The list is then parsed as an argv list using docopt.

    Example:

        .. code:: python

            @command
            def exact(args: Dict[str, Any], config: Config) -> int:
                \"""Compute the optimum of a small graph.

                Usage:
                    me2c exact [--budget <m>] <graph>
                    me2c exact --help
                \"""
                ...
    """

    def __init__(self, fn: Callable):
        # Take the name, docstring, etc from fn.
        functools.update_wrapper(self, fn)
        self.__doc__ = _fixup_docstring(self)

    def __call__(self, args: Dict[str, Any] | List[str], **kwargs) -> int:
        """Call the command object.

        Arguments:
            args (Dict[str, Any] | List[str]):
                The arguments. A dict is passed through directly. A list is
                parsed with docopt first; its first item is the program name.
            **kwargs:
                Additional arguments to forward to the wrapped function.

        Returns:
            int:
                An exit code.
        """
        if isinstance(args, dict):
            return self.__wrapped__(args, **kwargs)

        # Note: ``options_first=True`` only works at the top-level.
        if self.__wrapped__.__name__ == "main":
            parsed = docopt(self.usage, args[1:], options_first=True)
        else:
            parsed = docopt(self.usage, args[1:])
        return self.__wrapped__(parsed, **kwargs)

    def __repr__(self) -> str:
        return f"{command.__qualname__}({repr(self.__wrapped__)})"

    @property
    def usage(self) -> str:
        """The original docopt docstring of the wrapped function."""
        usage = cleandoc(self.__wrapped__.__doc__)
        usage += "\n"
        if self.__name__ == "main":
            usage += "\n" + _command_summary()
        return usage

    @property
    def summary(self) -> str:
        """The first line of the usage string."""
        return self.usage.split("\n", 1)[0]


def open_output(path: Optional[str]) -> TextIO:
    """Open ``path`` for writing, or return stdout for None or ``-``."""
    if path is None or path == "-":
        return sys.stdout
    return Path(path).open("w")


def close_output(fd: TextIO):
    if fd is not sys.stdout:
        fd.close()


# Re-exports
# ---------------------------------------------------------------------------

# The entry point.
from .__main__ import main

# The sub-commands.
#
# The module names start with an underscore to prevent naming conflict with the
# actual command objects.
from ._bench import bench
from ._exact import exact
from ._gen import gen
from ._normalize import normalize
from ._solve import solve
from ._verify import verify
