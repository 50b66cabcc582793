import copy
from typing import Any, Mapping

from ..errors import SettingError
from .props import Property


class PropertyGroup:
    """
    Group of properties. Define a subclass to create your PropertyGroup.
    Define properties by creating annotations with ``:``.

    .. code-block:: py

        class LimitsProps(PropertyGroup):
            aut_universe: IntProp(
                name="Automorphism Universe",
                desc="Largest universe for automorphism search.",
                default=8,
                min=1,
            )

    Setting an attribute validates through the property:

    .. code-block:: py

        pgroup.aut_universe               # Returns the property object.
        pgroup.aut_universe = 9           # Calls pgroup.aut_universe.set_value()
    """

    _props: Mapping[str, Property]

    def __init__(self):
        """
        Reads __annotations__ and stores in ``self._props``.
        Each instance gets its own property objects.
        """
        object.__setattr__(self, "_props", {})

        for k, v in type(self).__annotations__.items():
            if isinstance(v, Property):
                prop = copy.copy(v)
                prop.reset()
                self._props[k] = prop

    def __setattr__(self, name: str, value: Any):
        """
        ``pgroup.prop_name = 1``
        is equivalent to
        ``pgroup.prop_name.set_value(1)``
        """
        if name not in self._props:
            raise SettingError(f"No setting named {name!r}.")
        self._props[name].set_value(value)

    def __getattr__(self, name: str) -> Property:
        if name == "_props":
            raise AttributeError(name)
        try:
            return self._props[name]
        except KeyError:
            raise AttributeError(name) from None

    def _values(self) -> Mapping[str, Any]:
        """
        Current values of all properties, ``{"prop_name": value}``.
        """
        return {k: prop.value() for k, prop in self._props.items()}
