"""Deciding whether mn points are the full intersection of curves of degrees m and n.

The test is: ``#X == mn``; every curve of degree ``m+n-3`` through all but
one point of X passes through the last one; and no curve of degree below
m contains X.  Positive answers come with witness curves, negative ones
with a checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .curves import common_component, is_in_sigma_span, vanishing_space
from .independence import (
    PointSet,
    _as_pointset,
    fundamental_polynomial,
    is_essentially_dependent,
    is_n_independent,
    point_from_json,
    point_to_json,
    separable_points,
)
from .linalg import QMatrix, solve
from .poly import Point, Poly, dim_pi, evaluate, lift, monomials, multiply


class InternalError(RuntimeError):
    """A guarantee of the underlying theory failed to hold; indicates a bug."""


@dataclass(frozen=True)
class ConditionAFailure:
    point: Point
    certificate: Poly

    kind = "condition_a"

    def check(self, X: PointSet) -> bool:
        """The certificate vanishes on X minus the point and not at the point."""
        if evaluate(self.certificate, self.point) == 0:
            return False
        return all(evaluate(self.certificate, p) == 0 for p in X if p != self.point)


@dataclass(frozen=True)
class ConditionBFailure:
    certificate: Poly

    kind = "condition_b"

    def check(self, X: PointSet, m: int) -> bool:
        c = self.certificate
        return (
            not c.is_zero()
            and c.effective_degree < m
            and all(evaluate(c, p) == 0 for p in X)
        )


@dataclass(frozen=True)
class CardinalityMismatch:
    expected: int
    actual: int

    kind = "cardinality"


Failure = Union[ConditionAFailure, ConditionBFailure, CardinalityMismatch]


@dataclass(frozen=True)
class Decision:
    verdict: bool
    kappa: int
    sigma_m: Optional[Poly] = None
    sigma_n: Optional[Poly] = None
    failure: Optional[Failure] = None

    def to_json(self) -> dict:
        out: dict = {
            "verdict": self.verdict,
            "kappa": self.kappa,
            "sigma_m": None if self.sigma_m is None else self.sigma_m.to_json(),
            "sigma_n": None if self.sigma_n is None else self.sigma_n.to_json(),
            "failure": None,
        }
        f = self.failure
        if isinstance(f, ConditionAFailure):
            out["failure"] = {
                "kind": f.kind,
                "point": point_to_json(f.point),
                "certificate": f.certificate.to_json(),
            }
        elif isinstance(f, ConditionBFailure):
            out["failure"] = {"kind": f.kind, "certificate": f.certificate.to_json()}
        elif isinstance(f, CardinalityMismatch):
            out["failure"] = {"kind": f.kind, "expected": f.expected, "actual": f.actual}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Decision":
        raw = data.get("failure")
        failure: Optional[Failure] = None
        if raw is not None:
            kind = raw["kind"]
            if kind == "condition_a":
                failure = ConditionAFailure(
                    point_from_json(raw["point"]), Poly.from_json(raw["certificate"])
                )
            elif kind == "condition_b":
                failure = ConditionBFailure(Poly.from_json(raw["certificate"]))
            elif kind == "cardinality":
                failure = CardinalityMismatch(raw["expected"], raw["actual"])
            else:
                raise ValueError(f"unknown failure kind {kind!r}")
        sm, sn = data.get("sigma_m"), data.get("sigma_n")
        return cls(
            verdict=bool(data["verdict"]),
            kappa=int(data["kappa"]),
            sigma_m=None if sm is None else Poly.from_json(sm),
            sigma_n=None if sn is None else Poly.from_json(sn),
            failure=failure,
        )


def kappa(m: int, n: int) -> int:
    return m + n - 3


def condition_a(X: PointSet, m: int, n: int) -> tuple[bool, Optional[ConditionAFailure]]:
    """Essential (m+n-3)-dependence, with a separating curve on failure."""
    if m > n:
        raise ValueError(f"need m <= n, got m={m}, n={n}")
    X = _as_pointset(X)
    k = kappa(m, n)
    if k < 0:
        return True, None
    separable = separable_points(X, k)
    if not separable:
        return True, None
    A = separable[0]
    cert = fundamental_polynomial(A, X, k)
    if cert is None:
        raise InternalError(f"point {A} was reported separable but has no fundamental polynomial")
    return False, ConditionAFailure(A, cert)


def condition_b(X: PointSet, m: int) -> tuple[bool, Optional[ConditionBFailure]]:
    """No curve of degree < m through all of X."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    space = vanishing_space(X, m - 1)
    if not space.basis:
        return True, None
    cert = space.basis[0]
    return False, ConditionBFailure(cert)


def decide_intersection_set(X: PointSet, m: int, n: int) -> Decision:
    if m < 1 or m > n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    X = _as_pointset(X)
    k = kappa(m, n)
    if len(X) != m * n:
        return Decision(False, k, failure=CardinalityMismatch(m * n, len(X)))
    ok_a, fail_a = condition_a(X, m, n)
    if not ok_a:
        return Decision(False, k, failure=fail_a)
    ok_b, fail_b = condition_b(X, m)
    if not ok_b:
        return Decision(False, k, failure=fail_b)

    space_m = vanishing_space(X, m)
    if not space_m.basis:
        raise InternalError("no curve of degree m through a set satisfying both conditions")
    sigma_m = space_m.basis[0]
    sigma_n = next(
        (b for b in vanishing_space(X, n).basis if not is_in_sigma_span(b, sigma_m)), None
    )
    if sigma_n is None:
        raise InternalError("set is n-complete in the degree-m curve; no second witness")
    if common_component(sigma_m, sigma_n):
        raise InternalError("witness curves share a component")
    return Decision(True, k, sigma_m, sigma_n)


def verify_intersection_set(X: PointSet, sigma_m: Poly, sigma_n: Poly) -> bool:
    """X lies on both curves, has deg*deg points and the curves share no component."""
    X = _as_pointset(X)
    dm, dn = sigma_m.effective_degree, sigma_n.effective_degree
    if dm < 1 or dn < 1:
        return False
    if len(X) != dm * dn:
        return False
    for p in X:
        if evaluate(sigma_m, p) != 0 or evaluate(sigma_n, p) != 0:
            return False
    return not common_component(sigma_m, sigma_n)


def _multiples(sigma: Poly, d: int, k: int) -> list[tuple[Fraction, ...]]:
    """Coefficient vectors (degree-k basis) of ``x^i y^j * sigma`` for i+j <= d."""
    return [lift(multiply(Poly.monomial(i, j), sigma), k).coeffs for i, j in monomials(d)]


def noether_decompose(
    p: Poly, sigma_m: Poly, sigma_n: Poly, X: PointSet
) -> Optional[tuple[Poly, Poly]]:
    """Write p = A*sigma_m + B*sigma_n with deg A <= k - m, deg B <= k - n.

    ``k`` is the degree bound of p.  Returns None only if the linear system
    is inconsistent, which cannot happen for valid inputs.
    """
    X = _as_pointset(X)
    k = p.degree
    m, n = sigma_m.effective_degree, sigma_n.effective_degree
    if not verify_intersection_set(X, sigma_m, sigma_n):
        raise ValueError("the curves do not cut out exactly this point set")
    if k < m:
        raise ValueError(f"degree bound {k} of p is below deg sigma_m = {m}")
    if any(evaluate(p, pt) != 0 for pt in X):
        raise ValueError("p does not vanish on the point set")
    cols_a = _multiples(sigma_m, k - m, k)
    cols_b = _multiples(sigma_n, k - n, k) if k >= n else []
    M = QMatrix.from_rows(cols_a + cols_b, dim_pi(k)).transpose()
    v = solve(M, p.coeffs)
    if v is None:
        return None
    na = dim_pi(k - m)
    A = Poly(k - m, tuple(v[:na]))
    B = Poly(k - n, tuple(v[na:])) if k >= n else Poly.zero(-1)
    return A, B


class CBReport(NamedTuple):
    essentially_dependent: bool
    independent_above: bool
    punctured_independent: bool

    def to_json(self) -> dict:
        return {
            "essentially_dependent": self.essentially_dependent,
            "independent_above": self.independent_above,
            "punctured_independent": self.punctured_independent,
        }


def verify_cayley_bacharach(X: PointSet, m: int, n: int) -> CBReport:
    """The three independence properties of an m-by-n intersection set at degree m+n-3:
    essential dependence, independence one degree up, and independence of
    every one-point-deleted subset.
    """
    X = _as_pointset(X)
    k = kappa(m, n)
    return CBReport(
        is_essentially_dependent(X, k),
        is_n_independent(X, k + 1),
        all(is_n_independent(X.without(A), k) for A in X),
    )
