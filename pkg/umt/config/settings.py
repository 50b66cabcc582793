from typing import Any, Mapping

from ..errors import SettingError
from .accessor import Accessor
from .pgroup import PropertyGroup


class Settings:
    """
    Group of PropertyGroups.

    Create a subclass with your pgroups. Set ``_pgroups`` to a mapping of id
    to property group class; every Settings instance gets fresh groups.

    .. code-block:: py

        class MySettings(Settings):
            _pgroups = {
                "limits": LimitsProps,
            }

    Override ``setup`` to change values at construction time.

    .. code-block:: py

        class Roomy(MySettings):
            def setup(self):
                self.limits.aut_universe = 10
    """
    _pgroups: Mapping[str, type]

    def __init__(self):
        """
        Instantiates pgroups, then calls setup.
        """
        groups = {k: cls() for k, cls in type(self)._pgroups.items()}
        object.__setattr__(self, "_groups", groups)
        self.setup()

    def __getattr__(self, name: str) -> PropertyGroup:
        if name == "_groups":
            raise AttributeError(name)
        try:
            return self._groups[name]
        except KeyError:
            raise AttributeError(name) from None

    def values(self) -> Accessor:
        """
        Returns Accessor object of all pgroup values.
        """
        return Accessor({k: g._values() for k, g in self._groups.items()})

    def override(self, key: str, value: Any) -> None:
        """
        Set a value by dotted key, e.g. ``limits.aut_universe``.
        """
        group, _, name = key.partition(".")
        if group not in self._groups or not name:
            raise SettingError(f"No setting named {key!r}.")
        setattr(self._groups[group], name, value)

    def setup(self) -> None:
        """
        Do any value setting here.
        """
