"""
Exhaustive enumeration and verification campaigns.
"""

from .campaigns import CATALOG, Campaign, run_campaign, scan
from .enumerate import (EnumerationSpec, canonical_codes, count_unlabeled,
    enumerate_structures, relabel_maps)
from .report import CampaignReport, Finding
