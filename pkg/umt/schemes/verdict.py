"""
Scheme check results.
"""

from typing import Dict, List, Optional, Tuple

from ..formula import Formula, parse_formula

Items = Tuple[int, ...]


class SchemeVerdict:
    """
    Outcome of one scheme check. A violated verdict always carries enough
    witness data to be checked again directly: a formula with a satisfying
    and a falsifying tuple, a subset with its minimizers, or orbit classes.
    """
    scheme: str
    holds: bool
    mode: str
    n: Optional[int]
    relation: Optional[str]
    vacuous: bool

    witness_formula: Optional[Formula]
    witness_subset: Optional[Items]
    witness_tuple: Optional[Items]
    falsifying_tuple: Optional[Items]
    minimizers: Optional[Items]
    violation: Optional[str]
    orbit_classes: Optional[List[List[Items]]]
    z_sets: Dict[str, Items]
    splitter: Optional[Items]
    warnings: List[str]

    FIELDS = ("witness_formula", "witness_subset", "witness_tuple",
        "falsifying_tuple", "minimizers", "violation", "orbit_classes",
        "splitter")

    def __init__(self, scheme: str, holds: bool, mode: str,
            n: Optional[int] = None, relation: Optional[str] = None,
            **witnesses) -> None:
        self.scheme = scheme
        self.holds = holds
        self.mode = str(mode)
        self.n = n
        self.relation = relation
        self.vacuous = witnesses.pop("vacuous", False)
        self.z_sets = witnesses.pop("z_sets", {})
        self.warnings = witnesses.pop("warnings", [])
        for key in self.FIELDS:
            setattr(self, key, witnesses.pop(key, None))
        assert not witnesses, f"unknown verdict fields {sorted(witnesses)}"

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        out = {
            "scheme": self.scheme,
            "holds": self.holds,
            "mode": self.mode,
            "n": self.n,
            "relation": self.relation,
            "vacuous": self.vacuous,
            "z_sets": {k: list(v) for k, v in self.z_sets.items()},
            "warnings": list(self.warnings),
        }
        for key in self.FIELDS:
            value = getattr(self, key)
            if key == "witness_formula" and value is not None:
                value = value.text
            elif key == "orbit_classes" and value is not None:
                value = [[list(t) for t in c] for c in value]
            elif isinstance(value, tuple):
                value = list(value)
            out[key] = value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "SchemeVerdict":
        def tup(v):
            return None if v is None else tuple(v)

        formula = data.get("witness_formula")
        classes = data.get("orbit_classes")
        return cls(data["scheme"], bool(data["holds"]), data["mode"],
            n=data.get("n"), relation=data.get("relation"),
            vacuous=bool(data.get("vacuous", False)),
            z_sets={k: tuple(v) for k, v in data.get("z_sets", {}).items()},
            warnings=list(data.get("warnings", [])),
            witness_formula=None if formula is None else parse_formula(formula),
            witness_subset=tup(data.get("witness_subset")),
            witness_tuple=tup(data.get("witness_tuple")),
            falsifying_tuple=tup(data.get("falsifying_tuple")),
            minimizers=tup(data.get("minimizers")),
            violation=data.get("violation"),
            orbit_classes=None if classes is None else
                [[tuple(t) for t in c] for c in classes],
            splitter=tup(data.get("splitter")))

    def witnesses(self) -> List[dict]:
        """
        Non-empty witness fields, one entry each, for reports.
        """
        data = self.to_dict()
        return [{"name": k, "value": data[k]} for k in self.FIELDS
            if data[k] is not None]

    def __repr__(self) -> str:
        state = "holds" if self.holds else "violated"
        level = f" n={self.n}" if self.n is not None else ""
        return f"SchemeVerdict({self.scheme}{level} {self.mode}: {state})"
