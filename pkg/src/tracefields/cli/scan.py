"""Batch scan for discriminant multiplicity groups of totally real fields.

Fields sharing a discriminant are compared pairwise: first for conjugacy,
then, for non-conjugate or undecided pairs, by testing their trace-zero
forms for integral isometry. A non-conjugate pair with isometric
trace-zero forms is reported as a counterexample candidate.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .. import __version__
from ..algebra.integers import factor_integer
from ..errors import IrreducibilityUndetermined, ReducibleError, SearchEffortExceeded
from ..fields import NumberField, are_conjugate, field_from_poly, is_fundamental_disc, is_tame_at
from ..fields.field import IrreducibilityCertificate
from ..isometry import is_isometric
from ..traceforms import trace_zero_gram
from .table import FieldTableRecord

CONJUGATE = "conjugate"
CANDIDATE = "equivalent-forms-nonconjugate"
DISTINCT = "distinct-forms"
UNDETERMINED = "undetermined"
OUTCOMES = (CONJUGATE, CANDIDATE, DISTINCT, UNDETERMINED)

# Per-degree discriminant bounds used as --max-disc defaults.
DEFAULT_MAX_DISC = {4: 10**9, 5: 10**9, 6: 10**9, 7: 89 * 10**9, 8: 25 * 10**8, 9: 28 * 10**9, 10: 28 * 10**10}


def default_max_disc(n: int) -> int | None:
    """None means unbounded (degrees up to 3)."""
    if n <= 3:
        return None
    return DEFAULT_MAX_DISC.get(n)


@dataclass
class ScanConfig:
    fundamental: str = "quadratic-style"
    max_disc: int | None = None  # None: per-degree defaults
    require_tame: bool = False
    effort: int = 10**7
    seed: int = 0x5EED
    jobs: int = 1

    def bound_for(self, n: int) -> int | None:
        return self.max_disc if self.max_disc is not None else default_max_disc(n)


# -- field cache ----------------------------------------------------------

def cache_key(coeffs) -> str:
    return f"{__version__}|{','.join(map(str, coeffs))}"


def field_to_record(F: NumberField) -> dict:
    return {
        "min_poly": list(F.min_poly),
        "basis": [[str(x) for x in row] for row in F.basis],
        "disc": F.disc,
        "signature": list(F.signature),
        "index": F.index,
        "input_poly": list(F.input_poly),
        "certificate": [F.certificate.method, list(F.certificate.primes)],
    }


def field_from_record(rec: dict, label: str = "") -> NumberField:
    return NumberField(
        min_poly=tuple(rec["min_poly"]),
        basis=tuple(tuple(Fraction(x) for x in row) for row in rec["basis"]),
        disc=rec["disc"],
        disc_factorization=factor_integer(rec["disc"]),
        signature=tuple(rec["signature"]),
        index=rec["index"],
        input_poly=tuple(rec["input_poly"]),
        label=label,
        certificate=IrreducibilityCertificate(rec["certificate"][0], tuple(rec["certificate"][1])),
    )


class FieldCache:
    """JSON file of computed fields keyed by (polynomial, toolkit version)."""

    def __init__(self, path: str | Path | None):
        self.path = Path(path) if path else None
        self.data: dict = {}
        self.hits = 0
        if self.path and self.path.exists():
            self.data = json.loads(self.path.read_text())

    def field(self, record: FieldTableRecord) -> NumberField:
        key = cache_key(record.coefficients)
        if key in self.data:
            self.hits += 1
            return field_from_record(self.data[key], record.label)
        F = field_from_poly(record.coefficients, label=record.label)
        self.data[key] = field_to_record(F)
        return F

    def save(self) -> None:
        if self.path:
            self.path.write_text(json.dumps(self.data, sort_keys=True, indent=0))


# -- pair comparison --------------------------------------------------------

def compare_pair(F: NumberField, L: NumberField, effort: int = 10**7) -> dict:
    conj = are_conjugate(F, L)
    result = {"a": F.label, "b": L.label, "disc": F.disc, "conjugacy": conj.status}
    if conj.status == "yes":
        result["outcome"] = CONJUGATE
        result["witness"] = [str(x) for x in conj.witness]
        return result
    if conj.status == "no":
        result["certificate"] = _certificate_json(conj.certificate)
    else:
        result["conjugacy_reason"] = conj.reason
    try:
        iso = is_isometric(trace_zero_gram(F), trace_zero_gram(L), node_cap=effort)
    except SearchEffortExceeded as exc:
        result["outcome"] = UNDETERMINED
        result["reason"] = f"trace-zero isometry: {exc}"
        return result
    result["nodes"] = iso.nodes
    if iso:
        result["witness"] = [list(r) for r in iso.witness]
        if conj.status == "no":
            result["outcome"] = CANDIDATE
        else:
            result["outcome"] = UNDETERMINED
            result["reason"] = f"trace-zero forms isometric but conjugacy undecided: {conj.reason}"
    else:
        result["outcome"] = DISTINCT
        result["separator"] = list(iso.separator)
    return result


def _certificate_json(cert):
    kind = cert[0]
    if kind == "splitting":
        _, p, a, b = cert
        return {"kind": kind, "prime": p, "a": [list(x) for x in a.pairs], "b": [list(x) for x in b.pairs]}
    return {"kind": kind, "a": _plain(cert[1]), "b": _plain(cert[2])}


def _plain(x):
    return list(x) if isinstance(x, tuple) else x


def _compare_task(args):
    F, L, effort = args
    return compare_pair(F, L, effort)


# -- the scan -----------------------------------------------------------------

@dataclass
class ScanReport:
    config: dict
    version: str
    groups: dict[int, list[str]] = field(default_factory=dict)
    pairs: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    flagged: list[dict] = field(default_factory=list)
    timestamp: float = 0.0

    @property
    def summary(self) -> dict:
        counts = {o: 0 for o in OUTCOMES}
        for p in self.pairs:
            counts[p["outcome"]] += 1
        return {
            "fields_grouped": sum(len(v) for v in self.groups.values()),
            "groups": len(self.groups),
            "pairs": len(self.pairs),
            "skipped": len(self.skipped),
            "flagged": len(self.flagged),
            **counts,
        }

    @property
    def candidates(self) -> list[dict]:
        return [p for p in self.pairs if p["outcome"] == CANDIDATE]

    def lines(self) -> list[str]:
        """JSON lines: config, skipped/flagged records, groups, pairs, summary."""
        dump = lambda obj: json.dumps(obj, sort_keys=True)  # noqa: E731
        out = [dump({"type": "config", "version": self.version, "config": self.config,
                     "timestamp": self.timestamp})]
        out += [dump({"type": "skipped", **s}) for s in self.skipped]
        out += [dump({"type": "flagged", **s}) for s in self.flagged]
        out += [dump({"type": "group", "disc": d, "labels": labels}) for d, labels in sorted(self.groups.items())]
        out += [dump({"type": "pair", **p}) for p in self.pairs]
        out.append(dump({"type": "summary", **self.summary}))
        return out

    def write(self, path: str | Path) -> None:
        Path(path).write_text("\n".join(self.lines()) + "\n")


def run_scan(records: list[FieldTableRecord], config: ScanConfig | None = None,
             cache: FieldCache | None = None, malformed=()) -> ScanReport:
    config = config or ScanConfig()
    cache = cache or FieldCache(None)
    report = ScanReport(asdict(config), __version__, timestamp=time.time())
    for line, text, reason in malformed:
        report.skipped.append({"line": line, "label": text, "reason": f"malformed: {reason}"})

    by_disc: dict[int, list[NumberField]] = {}
    for rec in records:
        try:
            F = cache.field(rec)
        except (ReducibleError, IrreducibilityUndetermined, ValueError) as exc:
            report.skipped.append({"line": rec.line, "label": rec.label, "reason": f"{type(exc).__name__}: {exc}"})
            continue
        if rec.expected_disc is not None and rec.expected_disc != F.disc:
            report.flagged.append({"line": rec.line, "label": rec.label,
                                   "expected_disc": rec.expected_disc, "computed_disc": F.disc})
        reason = _filter_reason(F, config)
        if reason:
            report.skipped.append({"line": rec.line, "label": rec.label, "reason": reason})
            continue
        by_disc.setdefault(F.disc, []).append(F)
    cache.save()

    tasks = []
    for d in sorted(by_disc):
        fields = sorted(by_disc[d], key=lambda F: F.label)
        if len(fields) < 2:
            continue
        report.groups[d] = [F.label for F in fields]
        tasks += [(F, L, config.effort) for F, L in combinations(fields, 2)]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            report.pairs = list(pool.map(_compare_task, tasks, chunksize=4))
    else:
        report.pairs = [_compare_task(t) for t in tasks]
    return report


def _filter_reason(F: NumberField, config: ScanConfig) -> str | None:
    if not F.is_totally_real:
        return f"not totally real (signature {F.signature})"
    if F.degree < 2:
        return "degree 1"
    if not is_fundamental_disc(F.disc, config.fundamental):
        return f"discriminant {F.disc} is not fundamental ({config.fundamental})"
    bound = config.bound_for(F.degree)
    if bound is not None and abs(F.disc) > bound:
        return f"|disc| exceeds {bound}"
    if config.require_tame and any(is_tame_at(F, p) != "tame" for p in F.ramified_primes):
        return "not tame at every ramified prime"
    return None
