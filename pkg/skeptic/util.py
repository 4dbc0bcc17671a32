"""
Utility classes
---------------

There is a utility class for providing configuration data via an object which
presents dictionary keys as attributes, and one which detects whether the
library is running inside a virtual environment in order to pick a default
config location.

Experiments derive their random streams from a master seed with
:func:`sub_seed`, and sweep settings arrive from the command line and the
config file as comma-separated text, which :func:`parse_list` splits.

"""
from collections.abc import Mapping
import re
import logging
import sys
import hashlib
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

logger = logging.getLogger(__name__)


def sub_seed(seed: int, *keys: Any) -> int:
    """Derive a reproducible 64-bit seed from a master seed and some keys

    :param seed: the master seed of an experiment
    :param keys: any values identifying the work unit, such as a trial index
      and a sweep level

    The digest does not depend on the order in which work units run, so
    parallel or interrupted runs draw the same streams as sequential ones.

    """
    material = repr((int(seed),) + tuple(keys)).encode("utf-8")
    return int.from_bytes(hashlib.sha256(material).digest()[:8], "big")


def parse_list(
    value: Union[str, Sequence[Any], Any], cast: Callable[[Any], Any] = float
) -> List[Any]:
    """Turn a comma-separated string (or a scalar or sequence) into a list

    :param value: ``"0.05,0.15"``, ``[0.05, 0.15]`` or ``0.05``
    :param cast: applied to every element

    """
    if value is None:
        return []
    if isinstance(value, str):
        parts = [p.strip() for p in value.split(",")]
        return [cast(p) for p in parts if p]
    if isinstance(value, (list, tuple)):
        return [cast(v) for v in value]
    return [cast(value)]


class VenvDetector:
    """Detect use of a virtual environment and calculate local paths

    Instance attributes:

      :ve: :obj:`bool` indicating whether a virtual environment is active

      :confpath: :class:`~pathlib.Path` pointing at the default config file

      :venvpath: :class:`~pathlib.Path` to the root of the active virtual
        environment, or None if none is active

    """

    # find the base prefix; hopefully pyenv-compatible
    def get_base_prefix_compat(self) -> str:
        """Return the non-virtual base prefix

        Sometimes called `sys.real_prefix`, so we check for both.

        """
        return (
            getattr(sys, "base_prefix", None)
            or getattr(sys, "real_prefix", None)
            or sys.prefix
        )

    def in_virtualenv(self) -> bool:
        """Compare prefixes to determine if a virtual environment is active."""
        return self.get_base_prefix_compat() != sys.prefix

    @property
    def ve(self) -> bool:
        """Property which memoizes :meth:`~.in_virtualenv`"""
        if "_ve" not in vars(self):
            self._ve = self.in_virtualenv()
        return self._ve

    @property
    def confpath(self) -> Path:
        """Memoizes the config file's full path

        Inside a virtual environment the file lives at `etc/skeptic.ini`
        under the environment root, otherwise under `~/.config/skeptic`.

        """
        if "_confpath" not in vars(self):
            try:
                self._confpath = self.venvpath / "etc" / "skeptic.ini"
            except TypeError:
                self._confpath = (
                    Path.home() / ".config" / "skeptic" / "skeptic.ini"
                )
        return self._confpath

    @property
    def venvpath(self) -> Optional[Path]:
        """The virtual environment root, if any"""
        if self.ve:
            return Path(sys.prefix)


class AttrDict(Mapping):
    """Attribute Dictionary

    This simple class allows accessing the keys of a hash as attributes on an
    object.  As a useful side effect it also casts floats, integers and
    booleans in advance.

    This object is used in :class:`~skeptic.config.SkepticConfig` for holding
    the configuration data.  Values which cannot be cast, such as the
    comma-separated sweep lists, stay strings; see :func:`parse_list`.

    .. admonition:: Subclassing

      All *internal instance attributes*, i.e. ones not associated to a
      key-value pair in the source object, should begin with `_` (an
      underscore).

    """

    boolean_pattern = re.compile("^([Tt]rue|[Ff]alse)$")
    """A regex to detect text-string boolean values"""

    def __init__(
        self, data: Dict[str, Any] = None, **kwargs: Optional[Dict[str, Any]]
    ):
        """Populate an instance with attributes

        :param data: a :obj:`dict` mapping strings (attribute names) onto
          arbitrary values

        :param kwargs: used in place of `data` when it is not provided

        Each value is cast to :obj:`int`, then :obj:`float`, then to a
        :obj:`bool` if it reads `true` or `false`; otherwise it is kept.

        """
        if not data:
            data = kwargs
        for k, v in data.items():
            if k[0:2] != "__":
                val = v
                try:
                    val = int(v)
                except ValueError:
                    try:
                        val = float(v)
                    except ValueError:
                        m = self.boolean_pattern.match(v)
                        if m:
                            val = m.group(1).lower() == "true"
                except TypeError:
                    pass
                setattr(self, k, val)

    def __iter__(self):
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self.keys())

    def __getitem__(self, item) -> Any:
        try:
            return getattr(self, item)
        except AttributeError:
            raise KeyError(item)

    def __contains__(self, item):
        return item in self.__dict__

    def keys(self):
        return self.__dict__.keys()
