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

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

import tomli

from me2c.oracle import DEFAULT_EDGE_BUDGET, MAX_EDGE_BUDGET


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Config:
    """Run settings for me2c.

    The command line works without any configuration file. A TOML file only
    changes defaults, and ``-x key=value`` overrides single keys. This class
    provides several classmethods to load a Config:

    - `Config.from_path`: parses a TOML file located at a given path.
    - `Config.from_file`: parses a config from a file-like object.
    - `Config.from_toml`: parses a config from a TOML string.
    - `Config.from_dict`: creates a config from a dict, e.g. the output of
      ``tomli.loads``.

    See Also:
        The :doc:`/config` document lists every key.

    Parameters:
        path (Optional[~pathlib.Path]):
            The path to the config file. None if the config was not parsed
            from a file.
        strategy (str):
            The default strategy name. See `me2c.strategies`.
        oracle_budget (int):
            The most edges the exact solver accepts. At most 20.
        bench_workers (int):
            Worker processes for the ``bench`` command.
        step_limit_factor (int):
            Normalization stops with an error after
            ``factor * (n + m + 1)^2 + 100`` steps.
        options (Dict[str, Any]):
            Keys this version does not know. They are kept, with a warning.
    """

    path: Optional[Path]  #: Path to the config file, if any.
    strategy: str  #: Default strategy.
    oracle_budget: int  #: Edge budget of the exact solver.
    bench_workers: int  #: Benchmark worker processes.
    step_limit_factor: int  #: Normalization step cap multiplier.
    options: Dict[str, Any]  #: Unknown keys.

    def validate(self):
        """Validate the config.

        Raises:
            TypeError: A member has the wrong type.
            ValueError: A member has an invalid value.
        """
        if self.path is not None:
            if not isinstance(self.path, Path):
                raise TypeError(f"invalid path: {repr(self.path)}")
            if not self.path.exists():
                raise FileNotFoundError(f"file not found: {self.path}")

        if not isinstance(self.strategy, str) or self.strategy == "":
            raise TypeError(f"invalid strategy: {repr(self.strategy)}")

        for key in ("oracle_budget", "bench_workers", "step_limit_factor"):
            value = getattr(self, key)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"invalid {key}: {repr(value)}")
            if value < 1:
                raise ValueError(f"invalid {key}: {value}")

        if self.oracle_budget > MAX_EDGE_BUDGET:
            raise ValueError(f"oracle_budget may not exceed {MAX_EDGE_BUDGET}: {self.oracle_budget}")

    @property
    def name(self) -> str:
        """A string name for this config."""
        if self.path is not None:
            return str(self.path)
        else:
            return "<default_config>"

    @classmethod
    def empty(cls) -> Config:
        """Create a config with every default.

        Returns:
            Config:
                The config object.
        """
        return cls(
            path=None,
            strategy="general",
            oracle_budget=DEFAULT_EDGE_BUDGET,
            bench_workers=1,
            step_limit_factor=16,
            options={},
        )

    @classmethod
    def from_dict(
        cls,
        d: dict,
        path: Optional[Path] = None,
        **kwargs,
    ) -> Config:
        """Create a config object from a dictionary.

        Arguments:
            d (Dict[str, Any]):
                A dictionary of config keys.
            path (Optional[~pathlib.Path]):
                The path to the config file, if known.
            **kwargs:
                Overrides values in the resulting config object.

        Returns:
            Config:
                The config object.
        """
        d = {**d, **kwargs}

        if "path" in d:
            raise ValueError("illegal config option: path")

        default = cls.empty()
        options = {}
        fields = set(f.name for f in dataclasses.fields(cls))
        for k, v in d.items():
            if k not in fields:
                logger.warning(f"unknown config key: {k}")
                options[k] = v

        return cls(
            path=path,
            strategy=d.get("strategy", default.strategy),
            oracle_budget=d.get("oracle_budget", default.oracle_budget),
            bench_workers=d.get("bench_workers", default.bench_workers),
            step_limit_factor=d.get("step_limit_factor", default.step_limit_factor),
            options=options,
        )

    @classmethod
    def from_toml(
        cls,
        text: str,
        path: Optional[Path] = None,
        **kwargs,
    ) -> Config:
        """Parse a config object from a TOML string.

        Arguments:
            text (str):
                TOML data containing the config.
            path (Optional[~pathlib.Path]):
                The path to the config file, if known.
            **kwargs:
                Overrides values in the resulting config object.

        Returns:
            Config:
                The config object.
        """
        d = tomli.loads(text)
        return cls.from_dict(d, path, **kwargs)

    @classmethod
    def from_file(cls, fd: TextIO, **kwargs) -> Config:
        """Read a config object from a file.

        Arguments:
            fd (TextIO):
                TOML data containing the config.
            **kwargs:
                Overrides values in the resulting config object.

        Returns:
            Config:
                The config object.
        """
        text = fd.read()
        name = getattr(fd, "name", None)
        path = Path(name) if isinstance(name, str) else None
        return cls.from_toml(text, path, **kwargs)

    @classmethod
    def from_path(cls, path: Path, **kwargs) -> Config:
        """Read a config object from a path.

        Raises:
            FileNotFoundError:
                No config file was found.
        """
        with path.open() as fd:
            return cls.from_file(fd, **kwargs)
