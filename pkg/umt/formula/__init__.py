"""
First order formulas: syntax, parsing, semantics and enumeration.
"""

from .ast import *
from .ast import alpha_equivalent, canonical, free_order, substitute, variables
from .definitions import Definition, expand, load_definitions, parse_definitions
from .enumerate import (count_formulas, distinct_formulas, enumerate_formulas,
    free_names, random_formula)
from .parser import parse_formula
from .semantics import (Evaluator, distinct_mask, evaluate, factorial_closure,
    symmetrize, truth_set)
