"""Reproduction checks for the reference fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Iterator

from .. import fixtures as fx
from ..algebra.integers import is_prime
from ..fields import field_from_poly
from ..isometry import is_isometric
from ..quadforms import EQUIVALENT, SAME_SPINOR_GENUS, decide_theorem_general, rationally_equivalent, same_genus
from ..quadforms import watson_spinor_criterion
from ..spectra import compare_spectra
from ..traceforms import QuadLattice, gram_mod, gram_of_elements, trace_gram


@dataclass(frozen=True)
class Check:
    fixture: str
    item: str
    expected: Any
    computed: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def octic() -> Iterator[Check]:
    F, L = field_from_poly(fx.OCTIC_F, "x^8+15"), field_from_poly(fx.OCTIC_L, "x^8+240")
    yield Check("octic", "disc(F)", fx.OCTIC_DISC, F.disc)
    yield Check("octic", "disc(L)", fx.OCTIC_DISC, L.disc)
    MF = gram_of_elements(F, fx.OCTIC_BASIS_F)
    ML = gram_of_elements(L, fx.OCTIC_BASIS_L)
    yield Check("octic", "M_F entrywise", True, MF == fx.OCTIC_GRAM_F)
    yield Check("octic", "M_L entrywise", True, ML == fx.OCTIC_GRAM_L)
    zf, zl = gram_mod(QuadLattice(MF), 2)[1], gram_mod(QuadLattice(ML), 2)[1]
    yield Check("octic", "mod-2 zero flags (F, L)", (False, True), (zf, zl))
    yield Check("octic", "conclusion", "not equivalent", "not equivalent" if zf != zl else "no conclusion")


def cubics() -> Iterator[Check]:
    fields = [field_from_poly(c) for c in fx.CUBICS]
    yield Check("cubics", "discs", [fx.CUBIC_DISC] * 4, [F.disc for F in fields])
    yield Check("cubics", "|disc| prime", True, is_prime(abs(fx.CUBIC_DISC)))
    verdicts = [decide_theorem_general(F, L) for F, L in combinations(fields, 2)]
    yield Check("cubics", "pairwise verdicts", [EQUIVALENT] * 6, [v.outcome for v in verdicts])
    yield Check("cubics", "complete proof traces", True,
                all(v.proof_trace[-1].step == "eichler" for v in verdicts))


def _pair(name, polys, disc) -> Iterator[Check]:
    F, L = (field_from_poly(c) for c in polys)
    yield Check(name, "discs", [disc, disc], [F.disc, L.disc])
    yield Check(name, "verdict", EQUIVALENT, decide_theorem_general(F, L).outcome)


def quartic_quintic() -> Iterator[Check]:
    yield from _pair("quartics", fx.QUARTICS, fx.QUARTIC_DISC)
    yield from _pair("quintics", fx.QUINTICS, fx.QUINTIC_DISC)


def septic() -> Iterator[Check]:
    F, L = field_from_poly(fx.SEPTIC_F), field_from_poly(fx.SEPTIC_L)
    yield Check("septic", "signatures", [fx.SEPTIC_SIGNATURE] * 2, [F.signature, L.signature])
    yield Check("septic", "discs", [fx.SEPTIC_DISC] * 2, [F.disc, L.disc])
    below = compare_spectra(F, L, fx.SEPTIC_SPLIT_PRIME - 1)
    yield Check("septic", "spectra below 2741", "consistent", below.status)
    at = compare_spectra(F, L, fx.SEPTIC_SPLIT_PRIME)
    yield Check("septic", "first distinguishing prime", fx.SEPTIC_SPLIT_PRIME, at.prime)
    yield Check("septic", "types at 2741", (fx.SEPTIC_SPLIT_F, fx.SEPTIC_SPLIT_L),
                tuple(t.pairs for t in at.types) if at.types else None)
    yield Check("septic", "verdict", EQUIVALENT, decide_theorem_general(F, L).outcome)


def spinor_triple() -> Iterator[Check]:
    fields = [field_from_poly(c) for c in fx.SPINOR_TRIPLE]
    yield Check("spinor", "discs", [fx.SPINOR_DISC] * 3, [F.disc for F in fields])
    yield Check("spinor", "totally real", [True] * 3, [F.is_totally_real for F in fields])
    forms = [trace_gram(F) for F in fields]
    pairs = list(combinations(range(3), 2))
    iso = [is_isometric(forms[i], forms[j]) for i, j in pairs]
    yield Check("spinor", "pairwise isometric", [False] * 3, [r.isometric for r in iso])
    yield Check("spinor", "separators present", True, all(r.separator for r in iso))
    yield Check("spinor", "pairwise rationally equivalent", [True] * 3,
                [rationally_equivalent(forms[i], forms[j])[0] for i, j in pairs])
    genus = [same_genus(forms[i], forms[j]) for i, j in pairs]
    yield Check("spinor", "genus never 'different'", True, "different" not in genus)
    yield Check("spinor", "pipeline verdicts", [SAME_SPINOR_GENUS] * 3,
                [decide_theorem_general(fields[i], fields[j]).outcome for i, j in pairs])


def watson() -> Iterator[Check]:
    yield Check("watson", "(8, 2^10 3^7 5^7)", True, watson_spinor_criterion(8, fx.OCTIC_DISC))
    yield Check("watson", "(3, -3299)", True, watson_spinor_criterion(3, fx.CUBIC_DISC))
    yield Check("watson", "(3, 27)", False, watson_spinor_criterion(3, 27))


FIXTURES: dict[str, Callable[[], Iterator[Check]]] = {
    "octic": octic,
    "cubics": cubics,
    "quartic-quintic": quartic_quintic,
    "septic": septic,
    "spinor": spinor_triple,
    "watson": watson,
}


def run_checks(names=None) -> list[Check]:
    out = []
    for name, fn in FIXTURES.items():
        if names and name not in names:
            continue
        out.extend(fn())
    return out
