import pytest
from hypothesis import given
from hypothesis import strategies as st

from spreadbounds.bounds import (
    VALID_Q,
    SpreadInstance,
    all_bounds,
    best_bounds,
    decompose,
    drake_freeman_bound,
    lower_bound_construction,
    packing_bound,
    theorem1_bound,
    theorem2_bound,
)
from spreadbounds.exactmath import q_bracket


def grid():
    for q in VALID_Q:
        for t in range(2, 10):
            for k in (2, 3):
                for r in range(t):
                    yield q, k * t + r, t


@pytest.mark.parametrize(
    "q,n,t,k,r,l",
    [(2, 15, 6, 2, 3, 8), (2, 8, 4, 2, 0, 1), (9, 18, 8, 2, 2, 81), (2, 7, 4, 1, 3, 0)],
)
def test_decompose(q, n, t, k, r, l):
    inst = decompose(q, n, t)
    assert (inst.k, inst.r, inst.l) == (k, r, l)


@pytest.mark.parametrize("q,n,t", [(6, 10, 2), (11, 4, 2), (2, 3, 5), (2, 4, 0)])
def test_decompose_rejects(q, n, t):
    with pytest.raises(ValueError):
        decompose(q, n, t)


def test_instance_checks_l():
    with pytest.raises(ValueError):
        SpreadInstance(q=2, n=15, t=6, k=2, r=3, l=9)


@pytest.mark.parametrize("q,n,t,expected", [(2, 8, 4, 17), (2, 5, 2, 9), (2, 7, 4, 1), (3, 4, 2, 10)])
def test_lower_bound_construction(q, n, t, expected):
    res = lower_bound_construction(decompose(q, n, t))
    assert res.value == expected
    assert res.direction == "lower" and res.method == "Construction"


def test_construction_is_spread_size_when_r_zero():
    for q in VALID_Q:
        for t in (2, 3, 4):
            for k in (1, 2, 3, 4):
                n = k * t
                assert lower_bound_construction(decompose(q, n, t)).value == (q**n - 1) // (q**t - 1)


@pytest.mark.parametrize("q,n,t,expected", [(2, 4, 2, 5), (2, 5, 2, 10), (3, 5, 2, 30)])
def test_packing_bound(q, n, t, expected):
    assert packing_bound(decompose(q, n, t)).value == expected


@pytest.mark.parametrize(
    "q,n,t,value,z",
    [(2, 10, 4, 65, 0), (2, 15, 6, 515, 2), (9, 18, 8, 3486784426, 3)],
)
def test_theorem1(q, n, t, value, z):
    res = theorem1_bound(decompose(q, n, t))
    assert res.value == value
    assert res.params["z"] == z
    assert set(res.params) == {"z", "u"}
    assert res.certificate[-1].endswith("contradiction")


def test_theorem1_absent_cases():
    assert theorem1_bound(decompose(2, 8, 4)) is None  # r = 0
    assert theorem1_bound(decompose(2, 7, 4)) is None  # k = 1
    # q=2, r=3: [r]=7, t=4 gives z*=4 > 7/2
    assert theorem1_bound(decompose(2, 11, 4)) is None


def test_theorem1_value_is_minimum_over_feasible_z():
    for q, n, t in grid():
        inst = decompose(q, n, t)
        res = theorem1_bound(inst)
        if res is None:
            continue
        rq = inst.rq
        feasible = [z for z in range(0, rq // 2 + 1) if t - (rq + 1 - z) >= 0]
        assert res.value == min(inst.base + 1 + z * (q - 1) for z in feasible)


@pytest.mark.parametrize(
    "q,n,t,value,z,y",
    [(2, 15, 6, 515, 2, 3), (2, 17, 7, 1026, 1, 3), (9, 18, 8, 3486784420, 3, 2)],
)
def test_theorem2_reference_values(q, n, t, value, z, y):
    res = theorem2_bound(decompose(q, n, t))
    assert res.value == value
    assert (res.params["z"], res.params["y"]) == (z, y)
    assert res.params["x"] == value - decompose(q, n, t).base + 1


@pytest.mark.parametrize("q,n,t,value", [(2, 15, 6, 516), (2, 17, 7, 1028), (9, 18, 8, 3486784442)])
def test_drake_freeman_reference_values(q, n, t, value):
    res = drake_freeman_bound(decompose(q, n, t))
    assert res.value == value
    assert res.method == "DrakeFreeman" and res.params["y"] == t


def test_theorem2_absent_when_t_too_large():
    # t > [r]_q + 1 makes z negative
    assert theorem2_bound(decompose(2, 12, 5)) is None
    assert drake_freeman_bound(decompose(2, 12, 5)) is None


def test_theorem2_certificate_excludes_every_hole_count():
    res = theorem2_bound(decompose(2, 15, 6))
    rows = [line for line in res.certificate if line.startswith("i=")]
    assert len(rows) == 4
    assert all(("excluded" in line) or ("negative" in line) for line in rows)


@pytest.mark.parametrize(
    "q,n,t,lower,upper,exact",
    [(2, 10, 4, 65, 65, True), (2, 15, 6, 513, 515, False), (2, 4, 2, 5, 5, True), (2, 7, 4, 1, 1, True)],
)
def test_best_bounds(q, n, t, lower, upper, exact):
    bb = best_bounds(q, n, t)
    assert (bb.lower.value, bb.upper.value, bb.exact) == (lower, upper, exact)


def test_best_bounds_tie_break_prefers_theorem1():
    assert best_bounds(2, 15, 6).upper.method == "Theorem1"
    assert best_bounds(9, 18, 8).upper.method == "Theorem2"


def test_lower_never_exceeds_upper_on_grid():
    for q, n, t in grid():
        inst = decompose(q, n, t)
        lower = lower_bound_construction(inst).value
        for res in all_bounds(inst).values():
            if res is not None and res.direction == "upper":
                assert lower <= res.value, (q, n, t, res.method)


def test_theorem2_dominates_drake_freeman_on_grid():
    for q, n, t in grid():
        inst = decompose(q, n, t)
        t2, df = theorem2_bound(inst), drake_freeman_bound(inst)
        if t2 and df:
            assert t2.value <= df.value


def test_tight_when_t_exceeds_r_bracket():
    for q, n, t in grid():
        inst = decompose(q, n, t)
        if inst.r >= 1 and t > inst.rq:
            res = theorem1_bound(inst)
            assert res.params["z"] == 0
            assert res.value == lower_bound_construction(inst).value
            assert best_bounds(q, n, t).exact


def test_spread_case_exact():
    for q in VALID_Q:
        for t in range(1, 6):
            for k in (1, 2, 3):
                bb = best_bounds(q, k * t, t)
                assert bb.exact and bb.upper.value == (q ** (k * t) - 1) // (q**t - 1)


@given(st.sampled_from(VALID_Q), st.integers(1, 9), st.integers(2, 4), st.data())
def test_point_count_identity(q, t, k, data):
    r = data.draw(st.integers(0, t - 1))
    x = data.draw(st.integers(1, q**t))
    inst = decompose(q, k * t + r, t)
    lhs = q_bracket(inst.n, q) - (inst.base + x) * q_bracket(t, q)
    assert lhs == inst.rq * q**t - q_bracket(t, q) * (x - 1)


def test_params_match_method():
    inst = decompose(2, 15, 6)
    b = all_bounds(inst)
    assert b["Construction"].params == {} and b["Packing"].params == {}
    assert set(b["Theorem1"].params) == {"z", "u"}
    assert set(b["Theorem2"].params) == {"z", "y", "x"}
    assert set(b["DrakeFreeman"].params) == {"z", "y", "x"}
