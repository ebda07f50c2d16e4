"""Integer Laurent polynomials with exponents reduced modulo n.

Every evaluation point in this library is an n-th root of unity, where
z^n = 1, so a monomial z^-m can be stored as z^(n-m) without changing
any value.  Exponents are therefore canonicalized to [0, n).  This keeps
negative powers out of storage while the renderer can still print either
form.  Coefficients are exact integers; evaluation reduces the angle
r*e mod n before calling exp, so phases stay accurate for any exponent.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterDomainError


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse Laurent polynomial mod z^n = 1; exponent -> nonzero int."""

    n: int
    coeffs: dict = field(default_factory=dict)

    @classmethod
    def from_terms(cls, n: int, terms) -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e, c in terms:
            e %= n
            acc[e] = acc.get(e, 0) + c
        return cls(n, {e: c for e, c in sorted(acc.items()) if c != 0})

    @classmethod
    def constant(cls, n: int, c: int) -> "LaurentPoly":
        return cls.from_terms(n, [(0, c)])

    @classmethod
    def monomial(cls, n: int, c: int, e: int) -> "LaurentPoly":
        return cls.from_terms(n, [(e, c)])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check(self, other: "LaurentPoly") -> None:
        if self.n != other.n:
            raise ParameterDomainError(
                f"modulus mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        return LaurentPoly.from_terms(
            self.n, list(self.coeffs.items()) + list(other.coeffs.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = [(e1 + e2, c1 * c2)
                 for e1, c1 in self.coeffs.items()
                 for e2, c2 in other.coeffs.items()]
        return LaurentPoly.from_terms(self.n, terms)

    def eval_root(self, r: int) -> complex:
        """Value at z = exp(2*pi*i*r/n) for 0 <= r < n."""
        if not 0 <= r < self.n:
            raise ParameterDomainError(f"sector r={r} must lie in [0, {self.n})")
        return sum(
            (c * cmath.exp(2j * math.pi * ((r * e) % self.n) / self.n)
             for e, c in self.coeffs.items()),
            start=0j,
        )

    def reversed_exponents(self) -> "LaurentPoly":
        """The polynomial with every exponent e replaced by n - e."""
        return LaurentPoly.from_terms(
            self.n, [(-e, c) for e, c in self.coeffs.items()])

    def render(self, balanced: bool = False) -> str:
        """Signed-monomial text form, e.g. ``-1-z^2`` or ``4-z^4-z^-4``.

        ``balanced`` prints exponents above n/2 as negative powers.
        Terms appear in increasing canonical exponent order.
        """
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            shown = e - self.n if balanced and 2 * e > self.n else e
            if shown == 0:
                body = str(abs(c))
            else:
                z = "z" if shown == 1 else f"z^{shown}"
                body = z if abs(c) == 1 else f"{abs(c)}{z}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)


_TERM_RE = re.compile(r"([+-]?)(\d*)(z(?:\^(-?\d+))?)?")


def parse_laurent(text: str, n: int) -> LaurentPoly:
    """Parse signed-monomial text like ``6-z^2-z^-2`` into canonical form."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LaurentPoly(n, {})
    terms = []
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParameterDomainError(f"cannot parse {text!r} at {s[pos:]!r}")
        sign, digits, zpart, expo = m.groups()
        if not digits and not zpart:
            raise ParameterDomainError(f"cannot parse {text!r} at {s[pos:]!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if zpart:
            e = int(expo) if expo is not None else 1
        else:
            e = 0
        terms.append((e, coeff))
        pos = m.end()
    return LaurentPoly.from_terms(n, terms)


@dataclass(frozen=True)
class LaurentMatrix:
    """Square grid of LaurentPoly entries sharing one modulus n."""

    n: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def specialize(self, r: int) -> np.ndarray:
        """Entrywise evaluation at z = exp(2*pi*i*r/n)."""
        nu = self.order
        out = np.empty((nu, nu), dtype=complex)
        for i in range(nu):
            for j in range(nu):
                out[i, j] = self.entries[i][j].eval_root(r)
        return out

    def render(self, balanced: bool = False) -> str:
        """Aligned plain-text grid of the rendered entries."""
        cells = [[p.render(balanced) for p in row] for row in self.entries]
        widths = [max(len(row[j]) for row in cells) for j in range(self.order)]
        return "\n".join(
            "  ".join(cell.rjust(widths[j]) for j, cell in enumerate(row))
            for row in cells)

    def render_latex(self, balanced: bool = False) -> str:
        rows = [" & ".join(p.render(balanced) for p in row)
                for row in self.entries]
        body = " \\\\\n".join(rows)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
