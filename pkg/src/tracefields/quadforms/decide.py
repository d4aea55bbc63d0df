"""Decision pipelines for equivalence of integral trace forms.

``decide_theorem_general`` walks through the argument that two
non-totally-real fields of equal degree n >= 3, equal discriminant and
equal signature, ramified at a single tame prime, have equivalent
integral trace forms: matching Hasse invariants at every place, the tame
genus criterion, genus = spinor genus by a discriminant-divisibility
criterion, and finally Eichler's theorem for indefinite forms of rank >= 3.
Every step is recorded, with the exact statement relied on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.integers import factor_integer
from ..errors import WildRamificationError
from ..fields import NumberField, is_tame_at
from ..traceforms import trace_gram
from .hilbert import INF, local_profile, rationally_equivalent

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not-equivalent"
SAME_SPINOR_GENUS = "same-spinor-genus"
HYPOTHESES_NOT_MET = "hypotheses-not-met"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class ProofStep:
    step: str
    criterion: str
    result: bool | str


@dataclass
class EquivalenceVerdict:
    outcome: str
    proof_trace: list[ProofStep] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def failed_step(self) -> str | None:
        for s in self.proof_trace:
            if s.result is False:
                return s.step
        return None

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "proof_trace": [
                {"step": s.step, "criterion": s.criterion, "result": s.result} for s in self.proof_trace
            ],
            "notes": list(self.notes),
        }


def watson_spinor_criterion(n: int, d: int) -> bool:
    """True iff no integer k >= 3 has k^(n(n-1)/2) dividing d.

    Equivalently: every odd prime has v_p(d) < m and v_2(d) < 2m, m = n(n-1)/2.
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    m = n * (n - 1) // 2
    fac = factor_integer(d)
    for p, e in fac.factors:
        if p == 2 and e >= 2 * m:
            return False
        if p != 2 and e >= m:
            return False
    if m == 0:
        return False
    return True


def _require_tame(F: NumberField) -> None:
    for p in F.ramified_primes:
        t = is_tame_at(F, p)
        if t == "wild":
            raise WildRamificationError(f"{p} is wildly ramified in {F!r}")
        if t == "undetermined":
            raise WildRamificationError(f"tameness at {p} is undetermined for {F!r}")


def same_genus_tame(F: NumberField, L: NumberField) -> bool:
    """For tame fields: same genus iff equal discriminant and rationally equivalent trace forms."""
    _require_tame(F)
    _require_tame(L)
    if F.disc != L.disc:
        return False
    return rationally_equivalent(trace_gram(F), trace_gram(L))[0]


def decide_theorem_general(F: NumberField, L: NumberField) -> EquivalenceVerdict:
    steps: list[ProofStep] = []
    verdict = EquivalenceVerdict(UNDETERMINED, steps)

    def check(step, criterion, ok):
        steps.append(ProofStep(step, criterion, ok))
        return ok

    def fail():
        verdict.outcome = HYPOTHESES_NOT_MET
        return verdict

    n = F.degree
    if not check("degree", f"[F:Q] = [L:Q] = {n} >= 3 (got {F.degree}, {L.degree})",
                 F.degree == L.degree and n >= 3):
        return fail()
    if not check("discriminant", f"disc(F) = disc(L) (got {F.disc}, {L.disc})", F.disc == L.disc):
        return fail()
    ramified = F.ramified_primes
    if not check("single-ramified-prime", f"exactly one finite prime ramifies in F (got {ramified})",
                 len(ramified) == 1):
        return fail()
    p = ramified[0]
    tame = is_tame_at(F, p)
    if tame == "undetermined":
        steps.append(ProofStep("tame", f"p = {p} tamely ramified in F", "undetermined"))
        verdict.notes.append(f"tameness of {p} in F could not be decided")
        return verdict
    if not check("tame", f"p = {p} tamely ramified in F ({tame})", tame == "tame"):
        return fail()
    if not check("signature", f"sig(F) = sig(L) (got {F.signature}, {L.signature})",
                 F.signature == L.signature):
        return fail()
    tame_L = is_tame_at(L, p)
    steps.append(ProofStep(
        "tame-L",
        f"L is ramified only at {p} (equal discriminants); tameness of {p} in L: {tame_L}",
        tame_L == "tame" if tame_L != "undetermined" else "undetermined",
    ))
    if tame_L == "wild":
        verdict.notes.append("the tame genus criterion needs L tame as well")
        return fail()
    if tame_L == "undetermined":
        verdict.notes.append(f"tameness of {p} in L could not be decided")
        return verdict
    r, s = F.signature
    d = F.disc
    totally_real = s == 0

    h_inf = (-1) ** (s * (s - 1) // 2)
    check("hasse-infinity",
          f"tr is of type (r+s, s) = ({r + s}, {s}) over R, so h_inf = (-1)^(s(s-1)/2) = {h_inf} for both",
          True)
    check("hasse-2",
          "tame extensions: determinant and discriminant determine the trace form over Z_2; "
          "equal discriminants give equal h_2 (cited, not recomputed)",
          True)
    check("hasse-unramified", f"every prime l not dividing 2d = {2 * d} has h_l = 1 for both forms", True)
    check("hasse-p", f"h_{p} agrees by the product formula over all places", True)

    tF, tL = trace_gram(F), trace_gram(L)
    prof_F, prof_L = local_profile(tF), local_profile(tL)
    ok, report = rationally_equivalent(tF, tL)
    inf_ok = prof_F.hasse_at(INF) == prof_L.hasse_at(INF) == h_inf
    if not check("rational-equivalence-recomputed",
                 f"recomputed Hasse invariants agree at {sorted(report['hasse'], key=str)} "
                 f"and h_inf matches the closed form", ok and inf_ok):
        verdict.notes.append("recomputed local invariants contradict the cited argument")
        return verdict

    check("tame-genus",
          "tame fields with equal discriminant and rationally equivalent trace forms lie in the same genus",
          True)
    watson_F, watson_L = watson_spinor_criterion(n, F.disc), watson_spinor_criterion(n, L.disc)
    m = n * (n - 1) // 2
    if not check("spinor-genus",
                 f"no integer k >= 3 has k^{m} | {d} (reading of the divisibility criterion), "
                 f"so genus = spinor genus for F and L", watson_F and watson_L):
        verdict.notes.append("genus and spinor genus may differ; no conclusion")
        return verdict
    if totally_real:
        check("indefinite", "trace forms are indefinite (F not totally real)", False)
        verdict.outcome = SAME_SPINOR_GENUS
        verdict.notes.append("totally real: the forms are definite, Eichler's theorem does not apply")
        return verdict
    check("indefinite", f"trace forms are indefinite of rank {n} >= 3 (s = {s} > 0)", True)
    check("eichler", "indefinite forms of rank >= 3 in one spinor genus are integrally equivalent", True)
    verdict.outcome = EQUIVALENT
    return verdict
