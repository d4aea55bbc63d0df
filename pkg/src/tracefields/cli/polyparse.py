"""Parsing polynomials typed on the command line.

Accepted forms:

* sparse expressions in one variable: ``x^8+15``, ``16*x^4 - 23x^3 - 18x^2 + 1``,
  ``x**3+2*x+11``; ``^`` and ``**`` both denote powers and ``*`` is optional
  between a coefficient and the variable;
* coefficient lists, constant term first: ``11,2,0,1`` or ``[11, 2, 0, 1]``.
"""

from __future__ import annotations

import re

from ..errors import PolynomialParseError

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)?\s*(?:\*\s*)?(?P<var>[a-zA-Z])\s*(?:(?:\^|\*\*)\s*(?P<exp>\d+))?
          |
          (?P<const>\d+)
        )\s*""",
    re.VERBOSE,
)
_LIST = re.compile(r"^\s*\[?\s*-?\d+(\s*,\s*-?\d+)*\s*\]?\s*$")


def parse_coefficients(text: str) -> list[int]:
    body = text.strip().strip("[]")
    return [int(tok) for tok in body.split(",")]


def parse_polynomial(text: str) -> list[int]:
    """Coefficients c0..cn of the polynomial written in ``text``."""
    if _LIST.match(text) and "," in text:
        coeffs = parse_coefficients(text)
    elif re.fullmatch(r"\s*-?\d+\s*", text):
        coeffs = [int(text)]
    else:
        coeffs = _parse_expression(text)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise PolynomialParseError(f"not a nonconstant polynomial: {text!r}")
    return coeffs


def _parse_expression(text: str) -> list[int]:
    terms: dict[int, int] = {}
    var = None
    pos = 0
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise PolynomialParseError(f"cannot parse polynomial at {text[pos:]!r}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("const") is not None:
            k, c = 0, int(m.group("const"))
        else:
            if var is None:
                var = m.group("var")
            elif m.group("var") != var:
                raise PolynomialParseError(f"more than one variable in {text!r}")
            c = int(m.group("coef")) if m.group("coef") else 1
            k = int(m.group("exp")) if m.group("exp") else 1
        terms[k] = terms.get(k, 0) + sign * c
        pos = m.end()
    if not terms:
        raise PolynomialParseError(f"empty polynomial: {text!r}")
    n = max(terms)
    return [terms.get(k, 0) for k in range(n + 1)]


def format_polynomial(coeffs, var: str = "x") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])
