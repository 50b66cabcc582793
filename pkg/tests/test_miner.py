"""
Structure enumeration, parallel scans and the campaign runner.
"""

import numpy as np
import pytest

from umt.aut import structure_code
from umt.errors import *
from umt.miner import (CATALOG, CampaignReport, EnumerationSpec, canonical_codes,
    count_unlabeled, enumerate_structures, run_campaign, scan)
from umt.miner.campaigns import _probe_q
from umt.miner.enumerate import chunk_codes, chunks


def test_labeled_counts():
    spec = EnumerationSpec(2)
    assert spec.bits == 4 and spec.count == 16
    assert len(list(enumerate_structures(spec))) == 16
    assert EnumerationSpec(3, {"P": 1, "R": 2}).bits == 12


def test_unlabeled_counts():
    assert len(list(enumerate_structures(EnumerationSpec(2, labeled=False)))) \
        == 10
    assert len(list(enumerate_structures(EnumerationSpec(3, labeled=False)))) \
        == 104
    unary = EnumerationSpec(3, {"P": 1}, labeled=False)
    assert len(list(enumerate_structures(unary))) == 4


def test_burnside():
    assert [count_unlabeled(n) for n in (1, 2, 3, 4)] == [2, 10, 104, 3044]
    assert count_unlabeled(3, {"P": 1}) == 4


def test_decode_matches_code(l3):
    spec = EnumerationSpec(3)
    assert spec.decode(0b100110) == l3
    assert structure_code(l3) == 0b100110
    assert len(spec.decode(0).table("R")) == 0


def test_canonical_codes():
    spec = EnumerationSpec(2)
    # (0,1) and (1,0) are one class
    assert list(canonical_codes(spec, np.array([0b0010, 0b0100]))) == [2, 2]
    assert list(canonical_codes(spec, np.array([0b1001]))) == [0b1001]


def test_chunks():
    spec = EnumerationSpec(2)
    assert chunks(spec, 2) == [(0, 4), (4, 8), (8, 12), (12, 16)]
    assert chunks(spec, 12) == [(0, 16)]
    found = np.concatenate([chunk_codes(EnumerationSpec(2, labeled=False),
        a, b) for a, b in chunks(spec, 2)])
    assert len(found) == 10


def test_filter():
    spec = EnumerationSpec(2, filter=lambda s: len(s.table("R")) == 1)
    assert len(list(enumerate_structures(spec))) == 4


def test_size_caps(settings):
    with pytest.raises(SizeCapExceeded):
        EnumerationSpec(6).check()
    with pytest.raises(SizeCapExceeded):
        EnumerationSpec(3, {"R": 2, "T": 3}).check()
    settings.limits.miner_universe = 2
    with pytest.raises(SizeCapExceeded):
        list(enumerate_structures(EnumerationSpec(3)))


def test_scan_workers_agree(settings):
    settings.miner.chunk_bits = 5
    spec = EnumerationSpec(3)
    alone = scan(spec, _probe_q)
    settings.miner.workers = 2
    assert scan(spec, _probe_q) == alone
    assert [code for code, _ in alone] == list(range(512))


def test_theorem4_count():
    report = run_campaign("theorem4-count", {"size": 3})
    assert report.tallies["passing"] == 6
    assert report.tallies["f_passing"] == 6
    assert report.tallies["structures"] == 512
    assert report.ok
    assert report.finding("q-passers-are-reflexive-linear-orders").holds


def test_campaign_params(settings):
    with pytest.raises(UnknownCampaign):
        run_campaign("nope")
    with pytest.raises(SettingError):
        run_campaign("theorem4-count", {"depth": 2})
    with pytest.raises(SizeCapExceeded):
        run_campaign("theorem4-count", {"size": 6})
    report = run_campaign("lemma1-finite", {"size": 3})
    assert report.params == {"max_size": 3, "depth": 2}
    assert report.tallies["chains"] == 4


def test_catalog():
    for name in ("lemma1-finite", "two-implies-one", "theorem4-count",
            "f-q-crosscheck", "cyclic-ladder", "paley-probe", "q1-preorders",
            "iso-counts"):
        assert name in CATALOG
        assert CATALOG[name].summary


def test_report_dict():
    report = CampaignReport("demo", {"size": 2})
    report.tally("structures", 16)
    report.add("fine", True)
    report.add("observed", False, asserted=False)
    assert report.ok
    data = report.to_dict()
    assert "wall_time" not in data
    assert data["tallies"] == {"structures": 16}
    assert [f["name"] for f in data["findings"]] == ["fine", "observed"]
    assert "wall_time" in report.to_dict(timing=True)
    report.add("broken", False)
    assert not report.ok
