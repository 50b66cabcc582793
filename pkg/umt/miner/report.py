"""
Campaign results.
"""

from typing import Any, Dict, List, Mapping, Optional


class Finding:
    """
    One named claim checked by a campaign.

    Asserted findings are the campaign's expectations; a campaign fails when
    one of them does not hold. Findings with ``asserted=False`` only record
    what was observed.
    """
    name: str
    holds: bool
    asserted: bool
    witnesses: List[Any]
    detail: str

    def __init__(self, name: str, holds: bool, asserted: bool = True,
            witnesses: Optional[List[Any]] = None, detail: str = "") -> None:
        self.name = name
        self.holds = bool(holds)
        self.asserted = asserted
        self.witnesses = list(witnesses or [])
        self.detail = detail

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "asserted": self.asserted,
            "witnesses": self.witnesses,
            "detail": self.detail,
        }

    def __repr__(self) -> str:
        return f"Finding({self.name}: {self.holds})"


class CampaignReport:
    """
    Tallies and findings of one campaign run.
    """
    campaign: str
    params: Dict[str, Any]
    tallies: Dict[str, int]
    findings: List[Finding]
    wall_time: float

    def __init__(self, campaign: str, params: Mapping[str, Any]) -> None:
        self.campaign = campaign
        self.params = dict(params)
        self.tallies = {}
        self.findings = []
        self.wall_time = 0.0

    def tally(self, key: str, amount: int = 1) -> None:
        self.tallies[key] = self.tallies.get(key, 0) + amount

    def add(self, *args, **kwargs) -> Finding:
        finding = Finding(*args, **kwargs)
        self.findings.append(finding)
        return finding

    def finding(self, name: str) -> Finding:
        for f in self.findings:
            if f.name == name:
                return f
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        """
        Every asserted finding holds.
        """
        return all(f.holds for f in self.findings if f.asserted)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "campaign": self.campaign,
            "params": self.params,
            "tallies": dict(self.tallies),
            "findings": [f.to_dict() for f in self.findings],
            "ok": self.ok,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out
