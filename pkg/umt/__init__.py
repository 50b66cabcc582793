"""
UMT: uniformity schemes on finite relational structures.
"""

from . import config
from . import utils

from .errors import *
from .structure import (RelationTable, Structure, format_structure,
    load_structure, parse_structure)
from .formula import evaluate, parse_formula, truth_set
from .taxonomy import classify_binary, classify_cyclic, right_segments
from .aut import automorphism_group, orbits
from .schemes import check_F, check_Q, check_Q1, check_uniformity
from .miner import run_campaign

__version__ = utils.VERSION
