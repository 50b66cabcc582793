"""
Axiom scheme checks: uniformity, indicators and the atomicity schemes.
"""

from .atomicity import admissible_sets, check_F, check_Q, check_Q1
from .mode import Mode
from .recheck import recheck
from .uniformity import (check_uniformity, find_indicators, indicator_partition,
    indiscernibility_partition, instance_violation, uniformity_degrees)
from .verdict import SchemeVerdict
