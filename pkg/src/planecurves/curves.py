"""Curves through point sets and the tests built on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .independence import PointSet, _as_pointset, eval_matrix, vanishing_dim
from .linalg import QMatrix, det, nullspace, rank
from .poly import Poly, dim_pi, evaluate, lift, monomials, multiply

MAX_CONIC_SEARCH_POINTS = 30


@dataclass(frozen=True)
class CurveSpace:
    """Basis of the polynomials of degree <= n vanishing on a point set."""

    n: int
    basis: tuple[Poly, ...]

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)


def vanishing_space(X: PointSet, n: int) -> CurveSpace:
    """Nullspace of ``E(X, n)`` as polynomials.

    Basis vectors come from the RREF nullspace (one per free monomial) and
    are then scaled so their first nonzero coefficient is 1.
    """
    X = _as_pointset(X)
    if n < 0:
        return CurveSpace(n, ())
    basis = tuple(Poly(n, tuple(v)).normalized() for v in nullspace(eval_matrix(X, n)))
    return CurveSpace(n, basis)


def curve_through_points(X: PointSet, k: int) -> Optional[Poly]:
    space = vanishing_space(X, k)
    return space.basis[0] if space.basis else None


def is_in_sigma_span(p: Poly, sigma: Poly) -> bool:
    """Is ``p`` a multiple ``q * sigma`` with ``deg q <= p.degree - deg sigma``?"""
    n = p.degree
    m = sigma.effective_degree
    if m < 0:
        return p.is_zero()
    if m > n:
        return p.is_zero()
    cols = [lift(multiply(Poly.monomial(i, j), sigma), n).coeffs for i, j in monomials(n - m)]
    span = QMatrix.from_rows(cols, dim_pi(n))
    r = rank(span)
    return rank(span.vstack(QMatrix.from_rows([p.coeffs], dim_pi(n)))) == r


def is_n_complete(X: PointSet, sigma: Poly, n: int) -> bool:
    """Does every degree-<=n polynomial vanishing on X factor as ``q * sigma``?

    Decided by the dimension count ``dim P_{n,X} == dim Pi_{n-k}`` where k is
    the degree of sigma.  For ``k > n`` the right side is 0, so the test
    reduces to X containing an n-poised subset.  ``sigma`` is assumed
    squarefree; see :func:`squarefree_hint`.
    """
    X = _as_pointset(X)
    for pt in X:
        if evaluate(sigma, pt) != 0:
            raise ValueError(f"point {pt} does not lie on the curve")
    k = sigma.effective_degree
    if k < 1:
        raise ValueError("sigma must be a nonconstant polynomial")
    return vanishing_dim(X, n) == dim_pi(n - k)


# -- common components ---------------------------------------------------


def shear_parameter(*polys: Poly) -> int:
    """Smallest t >= 0 such that every poly, after ``x -> x + t*y``, has
    y-degree equal to its total degree.

    The y^d coefficient after shearing is the top form evaluated at (t, 1),
    a nonzero univariate polynomial in t, so a suitable t <= sum of degrees
    always exists.
    """
    forms = [p.leading_form() for p in polys]
    t = 0
    while True:
        if all(evaluate(f, (t, 1)) != 0 for f in forms):
            return t
        t += 1


def sylvester_matrix(f: list[Fraction], g: list[Fraction]) -> QMatrix:
    """Sylvester matrix of two univariate coefficient lists (low degree first)."""
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    rows = []
    fh, gh = f[::-1], g[::-1]
    for k in range(dg):
        rows.append([Fraction(0)] * k + fh + [Fraction(0)] * (size - k - df - 1))
    for k in range(df):
        rows.append([Fraction(0)] * k + gh + [Fraction(0)] * (size - k - dg - 1))
    return QMatrix.from_rows(rows, size)


def _trim(coeffs: list[Fraction], degree: int) -> list[Fraction]:
    return coeffs[: degree + 1]


def resultant_vanishes(p: Poly, q: Poly) -> bool:
    """Whether ``Res_y(p, q)`` is identically zero as a polynomial in x.

    Both inputs must already have constant nonzero leading coefficients in y
    (see :func:`shear_parameter`).  The resultant has x-degree at most
    ``deg p * deg q``, so it is zero iff it vanishes at that many plus one
    sample abscissae.
    """
    dp, dq = p.effective_degree, q.effective_degree
    lead_p = p.coefficient(0, dp)
    lead_q = q.coefficient(0, dq)
    if lead_p == 0 or lead_q == 0:
        raise ValueError("leading y-coefficients must be nonzero constants")
    needed = dp * dq + 1
    x0 = 0
    taken = 0
    while taken < needed:
        f = _trim(p.y_coefficients_at(x0), dp)
        g = _trim(q.y_coefficients_at(x0), dq)
        if f[-1] != 0 and g[-1] != 0:
            if det(sylvester_matrix(f, g)) != 0:
                return False
            taken += 1
        x0 += 1
    return True


@dataclass(frozen=True)
class ComponentCheck:
    shared: bool
    shear: int


def component_check(p: Poly, q: Poly) -> ComponentCheck:
    """Common-factor test with the shear used recorded."""
    for name, f in (("p", p), ("q", q)):
        if f.effective_degree < 1:
            raise ValueError(f"{name} must be a nonconstant polynomial")
    t = shear_parameter(p, q)
    ps, qs = p.shear(t), q.shear(t)
    # Leading y-coefficients are now nonzero constants, so both are
    # primitive over Q[x]: a shared factor must have positive y-degree,
    # which is exactly when the y-resultant vanishes identically.
    return ComponentCheck(resultant_vanishes(ps, qs), t)


def common_component(p: Poly, q: Poly) -> bool:
    """True iff p and q share a nonconstant factor."""
    return component_check(p, q).shared


def squarefree_hint(p: Poly) -> bool:
    """Heuristic squarefreeness check: p has no factor in common with dp/dy
    after the shear that gives it full y-degree.  Not used to gate anything.
    """
    if p.effective_degree < 1:
        raise ValueError("squarefree_hint needs a nonconstant polynomial")
    ps = p.shear(shear_parameter(p))
    dps = ps.derivative_y()
    if dps.effective_degree < 1:
        return True
    return not common_component(ps, dps)


# -- overload diagnostics ------------------------------------------------


def line_through(a, b) -> Poly:
    (x1, y1), (x2, y2) = a, b
    if (x1, y1) == (x2, y2):
        raise ValueError("need two distinct points")
    # (y2 - y1)(x - x1) - (x2 - x1)(y - y1)
    dy, dx = y2 - y1, x2 - x1
    return Poly.from_terms({(0, 0): -dy * x1 + dx * y1, (1, 0): dy, (0, 1): -dx}, 1).normalized()


def find_overloaded_line(X: PointSet, n: int) -> Optional[tuple[Poly, PointSet]]:
    """First line (in point-pair order) carrying at least n+2 points of X."""
    X = _as_pointset(X)
    need = n + 2
    if len(X) < max(need, 2):
        return None
    seen = set()
    for a, b in combinations(X.points, 2):
        line = line_through(a, b)
        if line in seen:
            continue
        seen.add(line)
        on = [p for p in X if evaluate(line, p) == 0]
        if len(on) >= need:
            return line, PointSet(tuple(on))
    return None


def find_overloaded_conic(X: PointSet, n: int) -> Optional[tuple[Poly, PointSet]]:
    """A (possibly reducible) conic through at least 2n+2 points of X.

    Scans 5-point subsets in lexicographic order; the first subset whose
    conic qualifies wins.  When the five points do not determine a unique
    conic, the pencil is cut down by adding further points of X in order
    while a conic through all of them survives.
    """
    X = _as_pointset(X)
    if len(X) > MAX_CONIC_SEARCH_POINTS:
        raise ValueError(
            f"conic search is capped at {MAX_CONIC_SEARCH_POINTS} points, got {len(X)}"
        )
    need = 2 * n + 2
    if len(X) < need:
        return None
    pts = X.points
    seen = set()
    for idx in combinations(range(len(pts)), min(5, len(pts))):
        chosen = [pts[i] for i in idx]
        space = vanishing_space(PointSet(tuple(chosen)), 2)
        if space.dim > 1:
            for p in pts:
                if p in chosen:
                    continue
                trial = vanishing_space(PointSet(tuple(chosen + [p])), 2)
                if trial.dim:
                    chosen.append(p)
                    space = trial
                if space.dim == 1:
                    break
        conic = space.basis[0]
        if conic in seen:
            continue
        seen.add(conic)
        on = [p for p in pts if evaluate(conic, p) == 0]
        if len(on) >= need:
            return conic, PointSet(tuple(on))
    return None
