"""
Settings: property groups with validated values.

Library code reads the process-wide settings through ``current()``.
"""

from .accessor import Accessor
from .default import DefaultSettings
from .pgroup import PropertyGroup
from .props import *
from .settings import Settings

_current = DefaultSettings()


def current() -> Settings:
    """
    The settings in effect.
    """
    return _current


def use(settings: Settings) -> Settings:
    """
    Replace the settings in effect. Returns the previous ones.
    """
    global _current
    prev = _current
    _current = settings
    return prev
