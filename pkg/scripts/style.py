"""
Source style and sample checks.

Python and RST files: line length, trailing whitespace, final newline.
Samples: whitespace and final newline, and every sample must load
(``.fms`` structures, ``.fml`` definitions, ``.txt`` single formulas).
"""

import sys
from pathlib import Path

import termcolor

ROOT = Path(__file__).resolve().parent.parent

MAX_LEN = 88

# (dir, globs, max line length or None)
PATHS = (
    ("docs", ("*.rst",), MAX_LEN),
    ("umt", ("*.py",), MAX_LEN),
    ("tests", ("*.py",), MAX_LEN),
    ("scripts", ("*.py",), MAX_LEN),
    # relation rows in samples run long
    ("samples", ("*.fms", "*.fml", "*.txt"), None),
)

SKIP = ("settings.rst",)


def report(ok: bool, path: Path, msg: str) -> None:
    color = "green" if ok else "red"
    print(termcolor.colored(f"{path.relative_to(ROOT)}: {msg}", color))


def text_problems(data: str, max_len):
    if not data.endswith("\n"):
        yield "no blank line at the end"
    for i, line in enumerate(data.split("\n"), start=1):
        if line.endswith(" "):
            yield f"line {i}: trailing whitespace"
        if max_len is not None and len(line) > max_len:
            yield f"line {i}: longer than {max_len} chars"


def load_problem(path: Path):
    """
    Error text if a sample does not load, else None.
    """
    from umt.errors import UmtError
    from umt.formula import load_definitions, parse_formula
    from umt.structure import load_structure

    try:
        if path.suffix == ".fms":
            load_structure(path)
        elif path.suffix == ".fml":
            load_definitions(path)
        elif path.suffix == ".txt":
            parse_formula(path.read_text(encoding="utf-8"))
    except UmtError as e:
        return f"{e.kind}: {e}"
    return None


def check_file(path: Path, max_len) -> int:
    problems = list(text_problems(path.read_text(encoding="utf-8"), max_len))
    if path.parent.name == "samples":
        problem = load_problem(path)
        if problem is not None:
            problems.append(problem)

    for msg in problems:
        report(False, path, msg)
    if not problems:
        report(True, path, "OK")
    return int(bool(problems))


def main():
    sys.path.insert(0, str(ROOT))
    exitcode = 0
    for directory, globs, max_len in PATHS:
        for glob in globs:
            for path in sorted((ROOT / directory).rglob(glob)):
                if path.name in SKIP or not path.is_file():
                    continue
                exitcode = max(exitcode, check_file(path, max_len))
    return exitcode


if __name__ == "__main__":
    sys.exit(main())
