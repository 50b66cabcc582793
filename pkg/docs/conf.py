"""
Sphinx configuration. Regenerates manual/settings.rst on every build.
"""

import os
import subprocess
import sys

ROOT = os.path.dirname(os.path.realpath(__file__))
sys.path.insert(0, os.path.dirname(ROOT))

import umt

project = "umt"
author = "umt Authors"
copyright = f"2026, {author}"
release = umt.__version__

extensions = [
    "sphinx_rtd_theme",
    "sphinx.ext.autodoc",
]
exclude_patterns = ["_build"]
html_theme = "sphinx_rtd_theme"

subprocess.run([sys.executable,
    os.path.join(os.path.dirname(ROOT), "scripts", "docgen.py"),
    "-o", os.path.join(ROOT, "manual", "settings.rst")], check=True)
