"""Exact bivariate polynomials in the graded-lex monomial basis.

A polynomial of degree bound ``n`` is a dense tuple of ``Fraction``
coefficients, one per monomial of total degree ``<= n``.  Monomials are
ordered by total degree, then by x-exponent descending::

    1, x, y, x^2, xy, y^2, x^3, x^2y, ...

so the monomial ``x^i y^j`` sits at index ``d(d+1)/2 + j`` with ``d = i+j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

Point = Tuple[Fraction, Fraction]

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def dim_pi(n: int) -> int:
    """Dimension of the space of bivariate polynomials of degree <= n.

    ``dim_pi(-1) == 0`` (the zero space); anything lower is clamped to 0 too.
    """
    if n < 0:
        return 0
    return (n + 1) * (n + 2) // 2


def d_func(k: int, n: int) -> int:
    """``dim_pi(n) - dim_pi(n - k)``: points forcing completeness on a degree-k curve."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return dim_pi(n) - dim_pi(n - k)


def monomial_index(i: int, j: int) -> int:
    d = i + j
    return d * (d + 1) // 2 + j


def monomial_at(index: int) -> Tuple[int, int]:
    """Inverse of :func:`monomial_index`."""
    if index < 0:
        raise ValueError("negative monomial index")
    d = 0
    while dim_pi(d) <= index:
        d += 1
    j = index - d * (d + 1) // 2
    return d - j, j


def monomials(n: int) -> list[Tuple[int, int]]:
    return [(d - j, j) for d in range(n + 1) for j in range(d + 1)]


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (or a JSON int) into a Fraction.

    Decimal and exponent forms are rejected: inputs must be exact.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    match = _FRACTION_RE.match(text)
    if match is None:
        raise ValueError(f"not an exact fraction string: {text!r}")
    num, den = match.groups()
    den_i = int(den) if den is not None else 1
    if den_i == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), den_i)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Poly:
    """Element of the degree-``degree`` polynomial space, as a coefficient vector."""

    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < -1:
            raise ValueError(f"degree bound must be >= -1, got {self.degree}")
        if len(self.coeffs) != dim_pi(self.degree):
            raise ValueError(
                f"expected {dim_pi(self.degree)} coefficients for degree "
                f"{self.degree}, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # -- construction ---------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n, (Fraction(0),) * dim_pi(n))

    @classmethod
    def constant(cls, c, n: int = 0) -> "Poly":
        return cls.from_terms({(0, 0): c}, n)

    @classmethod
    def monomial(cls, i: int, j: int, n: int | None = None, c=1) -> "Poly":
        return cls.from_terms({(i, j): c}, i + j if n is None else n)

    @classmethod
    def x(cls, n: int = 1) -> "Poly":
        return cls.monomial(1, 0, n)

    @classmethod
    def y(cls, n: int = 1) -> "Poly":
        return cls.monomial(0, 1, n)

    @classmethod
    def from_terms(cls, terms: Mapping[Tuple[int, int], object], n: int | None = None) -> "Poly":
        """Build from ``{(i, j): coefficient}``; the degree bound defaults to the largest i+j."""
        if n is None:
            n = max((i + j for (i, j), c in terms.items() if c != 0), default=0)
        coeffs = [Fraction(0)] * dim_pi(n)
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            if c == 0:
                continue
            if i + j > n:
                raise ValueError(f"term x^{i} y^{j} exceeds degree bound {n}")
            coeffs[monomial_index(i, j)] += Fraction(c)
        return cls(n, tuple(coeffs))

    @classmethod
    def from_vector(cls, vector: Sequence, n: int) -> "Poly":
        return cls(n, tuple(vector))

    # -- inspection -----------------------------------------------------

    def terms(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Nonzero terms ``(i, j, c)`` in graded-lex order."""
        for idx, c in enumerate(self.coeffs):
            if c:
                i, j = monomial_at(idx)
                yield i, j, c

    def coefficient(self, i: int, j: int) -> Fraction:
        if i + j > self.degree:
            return Fraction(0)
        return self.coeffs[monomial_index(i, j)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def effective_degree(self) -> int:
        """Actual total degree; -1 for the zero polynomial."""
        for idx in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[idx]:
                i, j = monomial_at(idx)
                return i + j
        return -1

    def y_degree(self) -> int:
        return max((j for _, j, _ in self.terms()), default=-1)

    def leading_form(self) -> "Poly":
        """Homogeneous part of top total degree."""
        d = self.effective_degree
        return Poly.from_terms({(i, j): c for i, j, c in self.terms() if i + j == d}, max(d, 0))

    # -- arithmetic -----------------------------------------------------

    def __call__(self, x, y) -> Fraction:
        return evaluate(self, (x, y))

    def __add__(self, other: "Poly") -> "Poly":
        n = max(self.degree, other.degree)
        a, b = lift(self, n), lift(other, n)
        return Poly(n, tuple(u + v for u, v in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "Poly":
        return Poly(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.degree, tuple(c * v for v in self.coeffs))

    def normalized(self) -> "Poly":
        """Scale so the first nonzero coefficient (graded-lex) is 1."""
        for c in self.coeffs:
            if c:
                return self.scale(1 / c)
        return self

    def shear(self, t) -> "Poly":
        """Substitute ``x -> x + t*y``; unimodular, so factor structure is preserved."""
        t = Fraction(t)
        out = [Fraction(0)] * dim_pi(self.degree)
        for i, j, c in self.terms():
            # (x + t y)^i y^j = sum_k C(i,k) t^k x^(i-k) y^(j+k)
            for k in range(i + 1):
                out[monomial_index(i - k, j + k)] += c * comb(i, k) * t**k
        return Poly(self.degree, tuple(out))

    def derivative_y(self) -> "Poly":
        n = max(self.degree - 1, 0)
        return Poly.from_terms({(i, j - 1): c * j for i, j, c in self.terms() if j > 0}, n)

    def y_coefficients_at(self, x0) -> list[Fraction]:
        """Coefficients in y of the univariate polynomial ``self(x0, y)``, low degree first."""
        x0 = Fraction(x0)
        out = [Fraction(0)] * (self.degree + 1 if self.degree >= 0 else 0)
        for i, j, c in self.terms():
            out[j] += c * x0**i
        return out

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"i": i, "j": j, "c": format_rational(c)} for i, j, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        try:
            n = data["degree"]
            raw_terms = data["terms"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial JSON: {data!r}") from exc
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"polynomial degree must be an integer, got {n!r}")
        terms: dict[Tuple[int, int], Fraction] = {}
        for term in raw_terms:
            try:
                i, j = term["i"], term["j"]
                c = parse_rational(term["c"])
            except (KeyError, TypeError) as exc:
                raise ValueError(f"malformed term: {term!r}") from exc
            if not all(isinstance(e, int) and not isinstance(e, bool) for e in (i, j)):
                raise ValueError(f"exponents must be integers: {term!r}")
            if (i, j) in terms:
                raise ValueError(f"duplicate term x^{i} y^{j}")
            terms[(i, j)] = c
        return cls.from_terms(terms, n)

    def __str__(self) -> str:
        return format_poly(self)


def evaluate(p: Poly, pt: Iterable) -> Fraction:
    x, y = (Fraction(v) for v in pt)
    xs = _powers(x, p.degree)
    ys = _powers(y, p.degree)
    total = Fraction(0)
    for i, j, c in p.terms():
        total += c * xs[i] * ys[j]
    return total


def multiply(p: Poly, q: Poly) -> Poly:
    n = p.degree + q.degree
    if p.degree < 0 or q.degree < 0:
        return Poly.zero(max(n, -1))
    out = [Fraction(0)] * dim_pi(n)
    q_terms = list(q.terms())
    for i1, j1, c1 in p.terms():
        for i2, j2, c2 in q_terms:
            out[monomial_index(i1 + i2, j1 + j2)] += c1 * c2
    return Poly(n, tuple(out))


def lift(p: Poly, n: int) -> Poly:
    """Re-index ``p`` into the degree-``n`` basis."""
    if n < p.effective_degree:
        raise ValueError(
            f"cannot lift a polynomial of degree {p.effective_degree} into degree bound {n}"
        )
    if n == p.degree:
        return p
    size = dim_pi(n)
    coeffs = list(p.coeffs[:size]) + [Fraction(0)] * (size - min(size, len(p.coeffs)))
    return Poly(n, tuple(coeffs))


def monomial_row(pt: Iterable, n: int) -> tuple[Fraction, ...]:
    """Values of all degree-<=n monomials at ``pt``, in graded-lex order."""
    x, y = (Fraction(v) for v in pt)
    return _monomial_row(x, y, n)


@lru_cache(maxsize=4096)
def _monomial_row(x: Fraction, y: Fraction, n: int) -> tuple[Fraction, ...]:
    xs = _powers(x, n)
    ys = _powers(y, n)
    return tuple(xs[d - j] * ys[j] for d in range(n + 1) for j in range(d + 1))


def format_poly(p: Poly) -> str:
    """Human-readable form, e.g. ``x^2 - x``, terms in graded-lex order."""
    parts = []
    for i, j, c in p.terms():
        mono = "*".join(
            s for s in (_var("x", i), _var("y", j)) if s
        )
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{format_rational(mag)}*{mono}"
        else:
            body = format_rational(mag)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts) if parts else "0"


def _var(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _powers(v: Fraction, n: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(max(n, 0)):
        out.append(out[-1] * v)
    return out
