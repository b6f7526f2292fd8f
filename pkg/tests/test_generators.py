import json
from fractions import Fraction as F

import pytest

from planecurves.curves import common_component
from planecurves.decision import verify_intersection_set
from planecurves.generators import (
    CIRCLE,
    KINDS,
    NEGATIVE_KINDS,
    GenerationError,
    Scenario,
    SplitMix64,
    always_intersection,
    circle_point,
    gen_conic_chords,
    gen_line_product,
    gen_negative,
    gen_point_cloud,
    gen_random_generic,
    gen_reducible_mixed,
    generate,
    grid_scenario,
    line_from_slope,
    scenario_filename,
    suite_specs,
)
from planecurves.independence import PointSet
from planecurves.poly import evaluate

from .oracles import brute_has_collinear


def _mix(z):
    # independent transcription of the documented mixer
    M = 2**64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) % M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) % M
    return z ^ (z >> 31)


def test_splitmix_reference_values():
    # published SplitMix64 outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_scenario_seeding_contract():
    state = 7
    for b in b"line_product_grid:2:3":
        state = _mix(state ^ b)
    rng = SplitMix64.for_scenario("line_product_grid", 2, 3, 7)
    assert rng.state == state
    state = (state + 0x9E3779B97F4A7C15) % 2**64
    first = _mix(state)
    state = (state + 0x9E3779B97F4A7C15) % 2**64
    second = _mix(state)
    assert rng.rational() == F(-9 + first % 19, 1 + second % 9)


def test_rationals_in_range():
    rng = SplitMix64(123)
    for _ in range(500):
        r = rng.rational()
        assert -9 <= r.numerator <= 9 and 1 <= r.denominator <= 9


def test_always_intersection_cases():
    small = [(m, n) for n in range(1, 6) for m in range(1, n + 1) if always_intersection(m, n)]
    assert small == [(1, 1), (1, 2), (2, 2)]


def test_line_product_grid_example():
    sc = grid_scenario([0, 1], [0, 1, 2])
    assert sc.X == PointSet.of((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2))
    assert sc.truth and (sc.m, sc.n) == (2, 3)


def test_line_product_single_point():
    sc = gen_line_product(1, 1, 0)
    assert len(sc.X) == 1 and sc.truth


@pytest.mark.parametrize("kind, m, n", [("line_product_grid", 3, 3), ("conic_chords", 2, 4), ("reducible_mixed", 3, 5)])
def test_reproducible(kind, m, n):
    a = generate(kind, m, n, 42)
    b = generate(kind, m, n, 42)
    assert json.dumps(a.to_json()) == json.dumps(b.to_json())
    assert generate(kind, m, n, 43).X != a.X


@pytest.mark.parametrize("m, n", [(1, 1), (1, 4), (2, 3), (3, 3), (3, 5), (5, 5)])
@pytest.mark.parametrize("seed", range(3))
def test_line_product_incidences(m, n, seed):
    """Each line of one family carries exactly one point per line of the other."""
    sc = gen_line_product(m, n, seed)
    assert len(sc.X) == m * n
    assert verify_intersection_set(sc.X, sc.intended_sigma_m, sc.intended_sigma_n)
    # re-derive the m-lines from consecutive blocks of n points
    for block in range(m):
        pts = sc.X.points[block * n:(block + 1) * n]
        if n >= 2:
            (x1, y1), (x2, y2) = pts[0], pts[1]
            on = [p for p in sc.X if (x2 - x1) * (p[1] - y1) == (p[0] - x1) * (y2 - y1)]
            assert sorted(on) == sorted(pts)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_conic_chords(n):
    sc = gen_conic_chords(n, 1)
    assert len(sc.X) == 2 * n
    assert all(evaluate(CIRCLE, p) == 0 for p in sc.X)
    assert verify_intersection_set(sc.X, sc.intended_sigma_m, sc.intended_sigma_n)
    if n == 1:
        assert (sc.m, sc.n) == (1, 2) and sc.intended_sigma_n == CIRCLE


def test_circle_point_rational():
    assert circle_point(F(1, 2)) == (F(3, 5), F(4, 5))


@pytest.mark.parametrize("m, n", [(2, 2), (3, 3), (3, 4), (4, 5)])
def test_reducible_mixed(m, n):
    sc = gen_reducible_mixed(m, n, 2)
    assert len(sc.X) == m * n
    assert verify_intersection_set(sc.X, sc.intended_sigma_m, sc.intended_sigma_n)
    on_circle = [p for p in sc.X if evaluate(CIRCLE, p) == 0]
    assert len(on_circle) == 2 * n


def test_negative_deleted_point():
    base = gen_line_product(2, 3, 0)
    sc = gen_negative(base, "negative_deleted_point", 0)
    assert len(sc.X) == 5 and not sc.truth
    assert all(p in base.X for p in sc.X)


def test_negative_moved_point():
    base = gen_line_product(2, 3, 0)
    sc = gen_negative(base, "negative_moved_point", 0)
    assert len(sc.X) == 6 and not sc.truth
    moved = [p for p in sc.X if p not in base.X]
    assert len(moved) == 1
    assert evaluate(base.intended_sigma_m, moved[0]) != 0
    assert evaluate(base.intended_sigma_n, moved[0]) != 0


def test_negative_moved_point_refuses_overfull():
    with pytest.raises(ValueError):
        gen_negative(gen_line_product(2, 2, 0), "negative_moved_point", 0)


def test_negative_collinear_overload():
    sc = generate("negative_collinear_overload", 2, 3, 4)
    assert len(sc.X) == 6 and not sc.truth
    assert brute_has_collinear(list(sc.X), 5)


def test_negative_collinear_needs_room():
    with pytest.raises(ValueError):
        gen_negative(gen_line_product(1, 3, 0), "negative_collinear_overload", 0)


def test_negative_rejects_false_base():
    base = gen_negative(gen_line_product(2, 3, 0), "negative_deleted_point", 0)
    with pytest.raises(ValueError):
        gen_negative(base, "negative_moved_point", 0)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 2), (2, 3), (3, 4)])
def test_random_generic(m, n):
    sc = gen_random_generic(m, n, 5)
    assert len(sc.X) == m * n
    assert not brute_has_collinear(list(sc.X), 3)
    assert sc.truth == always_intersection(m, n)


def test_generate_rejects():
    with pytest.raises(ValueError):
        generate("conic_chords", 3, 3, 0)
    with pytest.raises(ValueError):
        generate("no_such_kind", 1, 1, 0)
    with pytest.raises(ValueError):
        gen_line_product(3, 2, 0)


def test_generation_error_is_loud():
    assert issubclass(GenerationError, RuntimeError)


def test_scenario_json_round_trip():
    for kind in KINDS:
        m, n = (2, 3) if kind != "reducible_mixed" else (3, 3)
        sc = generate(kind, m, n, 9)
        assert Scenario.from_json(json.loads(json.dumps(sc.to_json()))) == sc


def test_suite_specs_shape():
    specs = suite_specs()
    kinds = {k for k, *_ in specs}
    assert kinds == set(KINDS)
    assert all(m == 2 for k, m, n, s in specs if k == "conic_chords")
    assert not any(always_intersection(m, n) for k, m, n, s in specs if k == "negative_moved_point")
    assert len(specs) == len(set(specs))
    assert scenario_filename("conic_chords", 2, 3, 4) == "conic_chords_m2_n3_s4.json"


def test_point_cloud_distinct_and_deterministic():
    a = gen_point_cloud(9, 3)
    assert len(a) == 9 and a == gen_point_cloud(9, 3)


def test_line_from_slope():
    line = line_from_slope(F(2), F(-1))
    assert evaluate(line, (3, 5)) == 0 and evaluate(line, (0, 0)) != 0


def test_negative_kinds_registry():
    assert set(NEGATIVE_KINDS) < set(KINDS)
    assert not common_component(CIRCLE, line_from_slope(F(1), F(0)))
