import re
from typing import Any, Optional, Sequence, Type

from ..errors import SettingError

__all__ = (
    "Property",
    "BoolProp",
    "IntProp",
    "StrProp",
)


class Property:
    """
    Property base class. One configurable value with a default and a
    validity check.
    """
    type: Type

    name: str
    desc: str
    default: Any

    _value: Any

    def __init__(self, name: str = "", desc: str = "",
            default: Optional[Any] = None):
        """
        Initialize property with common arguments for all subclasses.

        :param name: Human readable name of the property. Can be different from
            the variable name in Python.
        :param desc: Human readable description.
        :param default: Default value.
        """
        self.name = name
        self.desc = desc
        self.default = default if default is None else self.type(default)
        self._value = None

        if self.default is not None:
            assert self.verify(self.default)

    def set_value(self, value: Any):
        """
        Converts, checks validity and sets self._value
        """
        try:
            value = self.type(value)
        except (TypeError, ValueError):
            raise SettingError(f"{self.name}: cannot convert {value!r} "
                f"to {self.type.__name__}") from None
        if not self.verify(value):
            raise SettingError(f"{self.name}: invalid value {value!r}")
        self._value = value

    def reset(self) -> None:
        self._value = None

    def verify(self, value: Any) -> bool:
        """
        Check whether the value can be assigned to this prop, e.g.
        min and max.

        Default implementation returns True.
        Override in subclass, if applicable.
        """
        return True

    def value(self) -> Any:
        """
        Returns the set value, or the default.
        """
        return self.default if self._value is None else self._value


class BoolProp(Property):
    """
    Boolean.
    """
    type = bool


class IntProp(Property):
    """
    Integer.
    Min and max inclusive.
    """
    type = int

    min: Optional[int]
    max: Optional[int]

    def __init__(self, min: Optional[int] = None, max: Optional[int] = None,
            **kwargs) -> None:
        self.min = min
        self.max = max
        super().__init__(**kwargs)

    def set_value(self, value: Any):
        if isinstance(value, bool) or isinstance(value, float) \
                and not value.is_integer():
            raise SettingError(f"{self.name}: expected an integer, "
                f"got {value!r}")
        super().set_value(value)

    def verify(self, value: int) -> bool:
        """
        Checks min and max.
        """
        if self.min is not None and value < self.min:
            return False
        if self.max is not None and value > self.max:
            return False
        return True


class StrProp(Property):
    """
    String, optionally restricted to a set of choices or a regex.
    """
    type = str

    choices: Optional[Sequence[str]]
    pattern: Optional[str]

    def __init__(self, choices: Optional[Sequence[str]] = None,
            pattern: Optional[str] = None, **kwargs) -> None:
        self.choices = choices
        self.pattern = pattern
        super().__init__(**kwargs)

    def verify(self, value: str) -> bool:
        """
        Checks membership in choices and the pattern, if any.
        """
        if self.choices is not None and value not in self.choices:
            return False
        if self.pattern is not None and re.fullmatch(self.pattern, value) is None:
            return False
        return True
