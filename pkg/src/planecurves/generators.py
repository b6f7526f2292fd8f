"""Seeded construction of intersection sets and of sets that are not.

Randomness comes from :class:`SplitMix64`, a fixed 64-bit generator, so a
scenario is reproducible from ``(kind, m, n, seed)`` in any language::

    state <- seed mod 2^64
    for each byte b of "<kind>:<m>:<n>" (UTF-8):  state <- mix(state xor b)
    next():  state <- state + 0x9E3779B97F4A7C15 (mod 2^64);  return mix(state)

    mix(z):  z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9
             z <- (z xor (z >> 27)) * 0x94D049BB133111EB
             return z xor (z >> 31)              (all mod 2^64)

A random rational is ``p/q`` with ``p = -9 + next() mod 19`` and
``q = 1 + next() mod 9``, drawn in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .independence import PointSet, is_n_independent, point_from_json, point_to_json
from .poly import Point, Poly, dim_pi, evaluate, multiply

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_DRAWS = 1000

POSITIVE_KINDS = ("line_product_grid", "conic_chords", "reducible_mixed")
NEGATIVE_KINDS = ("negative_moved_point", "negative_deleted_point", "negative_collinear_overload")
KINDS = POSITIVE_KINDS + NEGATIVE_KINDS + ("random_generic",)

CIRCLE = Poly.from_terms({(0, 0): -1, (2, 0): 1, (0, 2): 1}, 2)


class GenerationError(RuntimeError):
    """Rejection sampling hit its draw cap."""


def always_intersection(m: int, n: int) -> bool:
    """Whether every mn points in general position are cut out by degrees m, n.

    True exactly when mn exceeds the dimension of the degree-(m+n-3) space,
    i.e. for (m, n) in {(1, 1), (1, 2), (2, 2)}.
    """
    return m * n > dim_pi(m + n - 3)


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    @classmethod
    def for_scenario(cls, kind: str, m: int, n: int, seed: int) -> "SplitMix64":
        rng = cls(seed)
        for b in f"{kind}:{m}:{n}".encode():
            rng.state = _mix64(rng.state ^ b)
        return rng

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return _mix64(self.state)

    def below(self, k: int) -> int:
        return self.next() % k

    def rational(self) -> Fraction:
        p = -9 + self.below(19)
        q = 1 + self.below(9)
        return Fraction(p, q)

    def point(self) -> Point:
        return self.rational(), self.rational()


@dataclass(frozen=True)
class Scenario:
    kind: str
    m: int
    n: int
    seed: int
    X: PointSet
    truth: bool
    intended_sigma_m: Optional[Poly] = None
    intended_sigma_n: Optional[Poly] = None

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "seed": self.seed,
            "points": [point_to_json(p) for p in self.X],
            "truth": self.truth,
        }
        if self.intended_sigma_m is not None:
            out["sigma_m"] = self.intended_sigma_m.to_json()
        if self.intended_sigma_n is not None:
            out["sigma_n"] = self.intended_sigma_n.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Scenario":
        sm, sn = data.get("sigma_m"), data.get("sigma_n")
        return cls(
            kind=data["kind"],
            m=data["m"],
            n=data["n"],
            seed=data["seed"],
            X=PointSet(tuple(point_from_json(p) for p in data["points"])),
            truth=data["truth"],
            intended_sigma_m=None if sm is None else Poly.from_json(sm),
            intended_sigma_n=None if sn is None else Poly.from_json(sn),
        )


# -- geometry helpers ------------------------------------------------------


def line_from_slope(a: Fraction, b: Fraction) -> Poly:
    """The line y = a*x + b."""
    return Poly.from_terms({(0, 0): -b, (1, 0): -a, (0, 1): 1}, 1)


def intersect_lines(l1: Poly, l2: Poly) -> Optional[Point]:
    a1, b1, c1 = l1.coefficient(1, 0), l1.coefficient(0, 1), l1.coefficient(0, 0)
    a2, b2, c2 = l2.coefficient(1, 0), l2.coefficient(0, 1), l2.coefficient(0, 0)
    d = a1 * b2 - a2 * b1
    if d == 0:
        return None
    return (b1 * c2 - b2 * c1) / d, (a2 * c1 - a1 * c2) / d


def circle_point(t: Fraction) -> Point:
    t2 = t * t
    return (1 - t2) / (1 + t2), 2 * t / (1 + t2)


def product(polys: Sequence[Poly]) -> Poly:
    out = Poly.constant(1)
    for p in polys:
        out = multiply(out, p)
    return out


def _incidences(pt: Point, components: Sequence[Poly]) -> int:
    return sum(1 for c in components if evaluate(c, pt) == 0)


def _in_general_position(points: list[Point], comps_m, comps_n, expected: int) -> bool:
    if len(points) != expected or len(set(points)) != expected:
        return False
    return all(_incidences(p, comps_m) == 1 and _incidences(p, comps_n) == 1 for p in points)


def line_product_scenario(
    lines_m: Sequence[Poly], lines_n: Sequence[Poly], seed: int = 0, kind: str = "line_product_grid"
) -> Scenario:
    """All pairwise intersections of two explicit line families."""
    pts = []
    for l1 in lines_m:
        for l2 in lines_n:
            pt = intersect_lines(l1, l2)
            if pt is None:
                raise ValueError("parallel lines across the two families")
            pts.append(pt)
    m, n = len(lines_m), len(lines_n)
    if not _in_general_position(pts, lines_m, lines_n, m * n):
        raise ValueError("line families are not in general position")
    return Scenario(kind, m, n, seed, PointSet(tuple(pts)), True, product(lines_m), product(lines_n))


def grid_scenario(xs: Sequence, ys: Sequence) -> Scenario:
    """The grid xs-by-ys, cut out by vertical and horizontal lines."""
    vert = [Poly.from_terms({(1, 0): 1, (0, 0): -Fraction(a)}, 1) for a in xs]
    horiz = [Poly.from_terms({(0, 1): 1, (0, 0): -Fraction(b)}, 1) for b in ys]
    return line_product_scenario(vert, horiz)


# -- positive scenarios ----------------------------------------------------


def gen_line_product(m: int, n: int, seed: int) -> Scenario:
    """X = intersections of m random lines with n random lines, y = a*x + b each."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    rng = SplitMix64.for_scenario("line_product_grid", m, n, seed)
    for _ in range(MAX_DRAWS):
        coeffs = [(rng.rational(), rng.rational()) for _ in range(m + n)]
        lines = [line_from_slope(a, b) for a, b in coeffs]
        try:
            return line_product_scenario(lines[:m], lines[m:], seed)
        except ValueError:
            continue
    raise GenerationError(f"line_product_grid m={m} n={n} seed={seed}: draw cap exceeded")


def _distinct_params(rng: SplitMix64, count: int) -> Optional[list[Fraction]]:
    ts = [rng.rational() for _ in range(count)]
    return ts if len(set(ts)) == count else None


def gen_conic_chords(n: int, seed: int) -> Scenario:
    """2n rational points on the unit circle, paired into n chords.

    For n == 1 the roles swap (a chord and the circle) so that m <= n holds.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = SplitMix64.for_scenario("conic_chords", 2, n, seed)
    for _ in range(MAX_DRAWS):
        ts = _distinct_params(rng, 2 * n)
        if ts is None:
            continue
        pts = [circle_point(t) for t in ts]
        chords = [_line_through(pts[2 * i], pts[2 * i + 1]) for i in range(n)]
        if not _in_general_position(pts, [CIRCLE], chords, 2 * n):
            continue
        X = PointSet(tuple(pts))
        if n == 1:
            return Scenario("conic_chords", 1, 2, seed, X, True, chords[0], CIRCLE)
        return Scenario("conic_chords", 2, n, seed, X, True, CIRCLE, product(chords))
    raise GenerationError(f"conic_chords n={n} seed={seed}: draw cap exceeded")


def gen_reducible_mixed(m: int, n: int, seed: int) -> Scenario:
    """sigma_m = unit circle times (m-2) random lines; sigma_n = n chords of the circle."""
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={n}")
    rng = SplitMix64.for_scenario("reducible_mixed", m, n, seed)
    for _ in range(MAX_DRAWS):
        ts = _distinct_params(rng, 2 * n)
        lines = [line_from_slope(rng.rational(), rng.rational()) for _ in range(m - 2)]
        if ts is None:
            continue
        on_circle = [circle_point(t) for t in ts]
        chords = [_line_through(on_circle[2 * i], on_circle[2 * i + 1]) for i in range(n)]
        pts = list(on_circle)
        parallel = False
        for line in lines:
            for chord in chords:
                pt = intersect_lines(line, chord)
                if pt is None:
                    parallel = True
                    break
                pts.append(pt)
            if parallel:
                break
        comps_m = [CIRCLE] + lines
        if parallel or not _in_general_position(pts, comps_m, chords, m * n):
            continue
        return Scenario(
            "reducible_mixed", m, n, seed, PointSet(tuple(pts)), True,
            product(comps_m), product(chords),
        )
    raise GenerationError(f"reducible_mixed m={m} n={n} seed={seed}: draw cap exceeded")


def _line_through(a: Point, b: Point) -> Poly:
    (x1, y1), (x2, y2) = a, b
    dy, dx = y2 - y1, x2 - x1
    return Poly.from_terms({(0, 0): -dy * x1 + dx * y1, (1, 0): dy, (0, 1): -dx}, 1)


# -- negative and generic scenarios ----------------------------------------


def gen_negative(base: Scenario, kind: str, seed: int) -> Scenario:
    if not base.truth:
        raise ValueError("negative scenarios are derived from true scenarios")
    if kind not in NEGATIVE_KINDS:
        raise ValueError(f"unknown negative kind {kind!r}")
    m, n = base.m, base.n
    rng = SplitMix64.for_scenario(kind, m, n, seed)
    pts = list(base.X)
    curves = [c for c in (base.intended_sigma_m, base.intended_sigma_n) if c is not None]

    if kind == "negative_deleted_point":
        del pts[rng.below(len(pts))]
        return Scenario(kind, m, n, seed, PointSet(tuple(pts)), False)

    if kind == "negative_moved_point":
        # Off both curves the new point escapes the base locus of the
        # degree-(m+n-3) curves through the remaining points, except in the
        # small cases where any such configuration is an intersection set.
        if always_intersection(m, n):
            raise ValueError(f"moving a point cannot break m={m}, n={n} configurations")
        idx = rng.below(len(pts))
        for _ in range(MAX_DRAWS):
            q = rng.point()
            if q in pts or any(evaluate(c, q) == 0 for c in curves):
                continue
            pts[idx] = q
            return Scenario(kind, m, n, seed, PointSet(tuple(pts)), False)
        raise GenerationError(f"{kind} m={m} n={n} seed={seed}: draw cap exceeded")

    # collinear overload: n+2 points of one line can never be cut out by
    # curves of degrees m, n <= n+1 without a shared component
    if m * n < n + 2:
        raise ValueError(f"collinear overload needs mn >= n+2, got m={m}, n={n}")
    for _ in range(MAX_DRAWS):
        a, b = rng.rational(), rng.rational()
        line = line_from_slope(a, b)
        xs = {rng.rational() for _ in range(n + 2)}
        if len(xs) < n + 2:
            continue
        on_line = [(x, a * x + b) for x in sorted(xs)]
        rest = [p for p in pts if evaluate(line, p) != 0][: m * n - (n + 2)]
        while len(rest) < m * n - (n + 2):
            q = rng.point()
            if evaluate(line, q) != 0 and q not in rest:
                rest.append(q)
        X = PointSet(tuple(on_line + rest))
        return Scenario(kind, m, n, seed, X, False)
    raise GenerationError(f"{kind} m={m} n={n} seed={seed}: draw cap exceeded")


def _three_collinear(points: Sequence[Point]) -> bool:
    for (x1, y1), (x2, y2), (x3, y3) in combinations(points, 3):
        if (x2 - x1) * (y3 - y1) == (x3 - x1) * (y2 - y1):
            return True
    return False


def gen_random_generic(m: int, n: int, seed: int) -> Scenario:
    """mn random points, no three collinear, in general position at degree m+n-3.

    Such a set is an intersection set only when mn exceeds the dimension of
    the degree-(m+n-3) space, which happens for (m, n) in {(1,1), (1,2), (2,2)}.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    rng = SplitMix64.for_scenario("random_generic", m, n, seed)
    k = m + n - 3
    overfull = always_intersection(m, n)
    for _ in range(MAX_DRAWS):
        pts = [rng.point() for _ in range(m * n)]
        if len(set(pts)) < len(pts) or _three_collinear(pts):
            continue
        X = PointSet(tuple(pts))
        if not overfull and not is_n_independent(X, k):
            continue
        return Scenario("random_generic", m, n, seed, X, overfull)
    raise GenerationError(f"random_generic m={m} n={n} seed={seed}: draw cap exceeded")


def generate(kind: str, m: int, n: int, seed: int) -> Scenario:
    """Dispatch by kind; negatives are derived from the line product with the same seed."""
    if kind == "line_product_grid":
        return gen_line_product(m, n, seed)
    if kind == "conic_chords":
        if m != 2:
            raise ValueError("conic_chords scenarios have m = 2")
        return gen_conic_chords(n, seed)
    if kind == "reducible_mixed":
        return gen_reducible_mixed(m, n, seed)
    if kind == "random_generic":
        return gen_random_generic(m, n, seed)
    if kind in NEGATIVE_KINDS:
        return gen_negative(gen_line_product(m, n, seed), kind, seed)
    raise ValueError(f"unknown scenario kind {kind!r}")


def gen_point_cloud(size: int, seed: int) -> PointSet:
    """Distinct points mixing a small integer grid, two planted lines and
    random rationals, so collinear runs occur often.  Used for
    independence cross-checks.
    """
    rng = SplitMix64.for_scenario("point_cloud", size, 0, seed)
    lines = [(rng.rational(), rng.rational()) for _ in range(2)]
    pts: list[Point] = []
    draws = 0
    while len(pts) < size:
        draws += 1
        if draws > MAX_DRAWS * max(size, 1):
            raise GenerationError(f"point cloud size={size} seed={seed}: draw cap exceeded")
        r = rng.below(4)
        if r == 0:
            p = (Fraction(rng.below(4)), Fraction(rng.below(4)))
        elif r == 3:
            p = rng.point()
        else:
            a, b = lines[r - 1]
            x = rng.rational()
            p = (x, a * x + b)
        if p not in pts:
            pts.append(p)
    return PointSet(tuple(pts))


def suite_specs(max_degree: int = 5, seeds: Sequence[int] = range(20)) -> list[tuple[str, int, int, int]]:
    """(kind, m, n, seed) for the full scenario corpus, in a fixed order."""
    specs = []
    pairs = [(m, n) for n in range(1, max_degree + 1) for m in range(1, n + 1)]
    for kind in KINDS:
        for m, n in pairs:
            if kind == "conic_chords" and m != 2:
                continue
            if kind == "reducible_mixed" and m < 3:
                continue
            if kind == "negative_collinear_overload" and m < 2:
                continue
            if kind == "negative_moved_point" and always_intersection(m, n):
                continue
            specs.extend((kind, m, n, s) for s in seeds)
    return specs


def scenario_filename(kind: str, m: int, n: int, seed: int) -> str:
    return f"{kind}_m{m}_n{n}_s{seed}.json"
