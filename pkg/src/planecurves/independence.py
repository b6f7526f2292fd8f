"""Independence, poisedness and fundamental polynomials of finite point sets.

Everything reduces to the evaluation matrix ``E(X, n)``: one row per point,
one column per monomial of degree <= n.  A point has an n-fundamental
polynomial exactly when its row is not in the span of the other rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .linalg import QMatrix, rank, rref, solve
from .poly import Point, Poly, dim_pi, format_rational, monomial_row, parse_rational


@dataclass(frozen=True)
class PointSet:
    """Ordered collection of distinct rational points."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        if len(set(pts)) != len(pts):
            seen = set()
            for p in pts:
                if p in seen:
                    raise ValueError(f"duplicate point {_fmt_point(p)}")
                seen.add(p)
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, *points) -> "PointSet":
        return cls(tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return (Fraction(pt[0]), Fraction(pt[1])) in self.points

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def without(self, pt) -> "PointSet":
        pt = (Fraction(pt[0]), Fraction(pt[1]))
        return PointSet(tuple(p for p in self.points if p != pt))

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(tuple(self.points[i] for i in indices))

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(self.points + tuple(p for p in other.points if p not in self.points))

    def same_set(self, other: "PointSet") -> bool:
        return set(self.points) == set(other.points)

    def to_json(self) -> dict:
        return {"points": [point_to_json(p) for p in self.points]}

    @classmethod
    def from_json(cls, data) -> "PointSet":
        if not isinstance(data, dict) or not isinstance(data.get("points"), list):
            raise ValueError('point set JSON must be an object with a "points" list')
        return cls(tuple(point_from_json(p) for p in data["points"]))


def point_to_json(p: Point) -> list[str]:
    return [format_rational(p[0]), format_rational(p[1])]


def point_from_json(raw) -> Point:
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise ValueError(f"a point must be a pair of fractions, got {raw!r}")
    return parse_rational(raw[0]), parse_rational(raw[1])


def _fmt_point(p: Point) -> str:
    return f"({format_rational(p[0])}, {format_rational(p[1])})"


def _as_pointset(X) -> PointSet:
    return X if isinstance(X, PointSet) else PointSet(tuple(X))


def eval_matrix(X: PointSet, n: int) -> QMatrix:
    X = _as_pointset(X)
    if n < -1:
        raise ValueError(f"degree must be >= -1, got {n}")
    return QMatrix.from_rows([monomial_row(p, n) for p in X], dim_pi(n))


def _dependency_profile(X: PointSet, n: int) -> tuple[list[int], list[bool]]:
    """Greedy independent rows of E(X, n) and, per point, whether its row is
    in the span of the others.

    Both come from one RREF of ``E^T``: its pivot columns are the greedy
    (input-order) maximal independent rows; the row of point A lies in the
    span of the others iff some left-null vector of E is nonzero at A, i.e.
    A is a free column of ``E^T`` or its pivot row touches a free column.
    """
    E = eval_matrix(X, n)
    R, pivots = rref(E.transpose())
    pivot_set = set(pivots)
    free = [c for c in range(len(X)) if c not in pivot_set]
    dependent = [True] * len(X)
    for i, pc in enumerate(pivots):
        dependent[pc] = any(R[i, f] != 0 for f in free)
    return pivots, dependent


def is_n_independent(X: PointSet, n: int) -> bool:
    X = _as_pointset(X)
    return rank(eval_matrix(X, n)) == len(X)


def is_n_poised(X: PointSet, n: int) -> bool:
    X = _as_pointset(X)
    return len(X) == dim_pi(n) and is_n_independent(X, n)


def fundamental_polynomial(A: Point, X: PointSet, n: int) -> Optional[Poly]:
    """A polynomial of degree <= n equal to 1 at A and 0 on the rest of X, if any."""
    X = _as_pointset(X)
    A = (Fraction(A[0]), Fraction(A[1]))
    if A not in X:
        raise ValueError(f"{_fmt_point(A)} is not a point of the set")
    rhs = [Fraction(int(p == A)) for p in X]
    v = solve(eval_matrix(X, n), rhs)
    return None if v is None else Poly(n, tuple(v))


def is_essentially_dependent(X: PointSet, k: int) -> bool:
    """True iff no point of X has a k-fundamental polynomial.

    Equivalently ``rank E(X - {A}, k) == rank E(X, k)`` for every A.  For
    ``k == -1`` this holds vacuously.
    """
    X = _as_pointset(X)
    if k < 0:
        return True
    return all(_dependency_profile(X, k)[1])


def separable_points(X: PointSet, k: int) -> list[Point]:
    """Points of X that do have a k-fundamental polynomial, in input order."""
    X = _as_pointset(X)
    if k < 0:
        return []
    _, dependent = _dependency_profile(X, k)
    return [p for p, dep in zip(X, dependent) if not dep]


def max_independent_subset(X: PointSet, n: int) -> PointSet:
    """Greedy scan in input order, keeping each point that raises the rank."""
    X = _as_pointset(X)
    if n < 0:
        return PointSet(())
    pivots, _ = _dependency_profile(X, n)
    return X.subset(pivots)


def vanishing_dim(X: PointSet, n: int) -> int:
    """Dimension of the space of degree-<=n polynomials vanishing on X."""
    X = _as_pointset(X)
    return dim_pi(n) - rank(eval_matrix(X, n))


def interpolate(X: PointSet, values: Sequence, n: int) -> Optional[Poly]:
    X = _as_pointset(X)
    if len(values) != len(X):
        raise ValueError(f"got {len(values)} values for {len(X)} points")
    v = solve(eval_matrix(X, n), [Fraction(c) for c in values])
    return None if v is None else Poly(n, tuple(v))


@dataclass(frozen=True)
class IndependenceReport:
    n: int
    independent: bool
    poised: bool
    essentially_dependent: bool
    witness_point: Optional[Point]
    max_independent_subset: PointSet
    vanishing_dim: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "independent": self.independent,
            "poised": self.poised,
            "essentially_dependent": self.essentially_dependent,
            "witness_point": None if self.witness_point is None else point_to_json(self.witness_point),
            "max_independent_subset": self.max_independent_subset.to_json()["points"],
            "vanishing_dim": self.vanishing_dim,
        }


def independence_report(X: PointSet, n: int) -> IndependenceReport:
    X = _as_pointset(X)
    if n < 0:
        pivots, dependent = [], [True] * len(X)
    else:
        pivots, dependent = _dependency_profile(X, n)
    independent = len(pivots) == len(X)
    witness = next((p for p, dep in zip(X, dependent) if dep), None)
    return IndependenceReport(
        n=n,
        independent=independent,
        poised=independent and len(X) == dim_pi(n),
        essentially_dependent=all(dependent),
        witness_point=witness,
        max_independent_subset=X.subset(pivots),
        vanishing_dim=dim_pi(n) - len(pivots),
    )
