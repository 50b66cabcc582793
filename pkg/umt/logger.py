"""
Logging utils.

Everything goes to stderr so that reports on stdout stay reproducible.
"""

import sys
import termcolor
from datetime import datetime

LEVELS = ("debug", "info", "warn", "error", "quiet")

_level = LEVELS.index("info")


def set_level(name: str) -> None:
    """
    Only messages at ``name`` or above are printed.
    ``quiet`` silences everything.
    """
    global _level
    _level = LEVELS.index(name)


def get_level() -> str:
    return LEVELS[_level]


def time():
    now = datetime.now()
    return now.strftime("%H:%M:%S")


def log(type: str, msg: str, color: str):
    if LEVELS.index(type.lower()) < _level:
        return
    s = f"[{time()}] {type}:"
    s += " " * (6-len(type))
    s += msg
    print(termcolor.colored(s, color), file=sys.stderr)

def debug(msg: str) -> None:
    """
    Debug log to stderr, hidden unless verbose.
    Color: grey
    """
    log("DEBUG", msg, "dark_grey")

def info(msg: str) -> None:
    """
    Info log to stderr.
    Color: cyan
    """
    log("INFO", msg, "cyan")

def warn(msg: str) -> None:
    """
    Warning log to stderr.
    Color: yellow
    """
    log("WARN", msg, "yellow")

def error(msg: str) -> None:
    """
    Error log to stderr.
    Color: red
    """
    log("ERROR", msg, "red")
