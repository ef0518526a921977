import itertools

import pytest

from spreadbounds.exactmath import gaussian_binomial, q_bracket
from spreadbounds.galois import (
    CapacityError,
    enumerate_subspaces,
    hyperplanes,
    make_field,
    point_index,
    point_vector,
    projective_space,
    rref,
    subspace_from_basis,
)

FIELDS = [2, 3, 4, 5, 7, 8, 9]


def test_prime_field_arithmetic():
    f = make_field(2)
    assert f.add[1][1] == 0
    f = make_field(7)
    assert f.mul[3][5] == 1 and f.inv[3] == 5


def test_extension_fields_satisfy_reduction_polynomial():
    # x is encoded as p (digit 1 = coefficient of x)
    f4 = make_field(4)
    x = 2
    assert f4.mul[x][x] == f4.add[x][1]  # x^2 = x + 1
    f8 = make_field(8)
    x = 2
    x3 = f8.mul[f8.mul[x][x]][x]
    assert x3 == f8.add[x][1]  # x^3 = x + 1
    f9 = make_field(9)
    x = 3
    assert f9.mul[x][x] == f9.add[x][1]  # x^2 = -2x - 2 = x + 1 over F_3


@pytest.mark.parametrize("q", FIELDS)
def test_multiplicative_group_is_cyclic(q):
    f = make_field(q)
    orders = []
    for a in range(1, q):
        power, k = a, 1
        while power != 1:
            power, k = f.mul[power][a], k + 1
        orders.append(k)
    assert max(orders) == q - 1


def test_rejects_unsupported_order():
    for q in (1, 6, 10, 11, 16):
        with pytest.raises(ValueError):
            make_field(q)


def test_point_index_examples():
    assert [point_index(v, 2) for v in [(0, 1), (1, 0), (1, 1)]] == [0, 1, 2]
    assert len(projective_space(3, 2)) == 4


@pytest.mark.parametrize("q,n", [(2, 4), (3, 3), (4, 3), (9, 2)])
def test_point_index_round_trip_and_scaling(q, n):
    f = make_field(q)
    for i in range(q_bracket(n, q)):
        v = point_vector(i, q, n)
        assert point_index(v, q) == i
        for alpha in range(1, q):
            assert point_index(tuple(f.mul[alpha][a] for a in v), q) == i
    with pytest.raises(ValueError):
        point_index((0,) * n, q)


@pytest.mark.parametrize(
    "q,n,d,expected",
    [(2, 4, 2, 35), (3, 4, 2, 130), (2, 5, 5, 1), (4, 3, 2, 21)],
)
def test_enumerate_counts(q, n, d, expected):
    subs = enumerate_subspaces(make_field(q), n, d)
    assert len(subs) == expected == gaussian_binomial(n, d, q)
    assert len({s.mask for s in subs}) == expected
    assert all(len(s.points) == q_bracket(d, q) for s in subs)


@pytest.mark.parametrize("q,n", [(2, 2), (2, 5), (3, 3), (5, 3), (9, 3)])
def test_hyperplane_counts(q, n):
    planes = hyperplanes(make_field(q), n)
    assert len(planes) == q_bracket(n, q)
    assert all(h.dim == n - 1 for h in planes)


@pytest.mark.parametrize("q,n,d", [(2, 4, 2), (3, 3, 2), (4, 3, 2), (2, 5, 3)])
def test_point_sets_closed_under_span(q, n, d):
    f = make_field(q)
    space = projective_space(q, n)
    for s in enumerate_subspaces(f, n, d):
        pts = set(s.points)
        for i, j in itertools.combinations(sorted(pts), 2):
            u, v = space.points[i], space.points[j]
            for a, b in itertools.product(range(q), repeat=2):
                w = tuple(f.add[f.mul[a][x]][f.mul[b][y]] for x, y in zip(u, v))
                if any(w):
                    assert space.point_index(w) in pts


def test_basis_is_rref_and_canonical():
    f = make_field(3)
    for s in enumerate_subspaces(f, 4, 2):
        assert rref(f, s.basis) == s.basis
        assert subspace_from_basis(3, 4, [s.basis[1], s.basis[0]]) == s


def test_capacity_limit():
    with pytest.raises(CapacityError):
        enumerate_subspaces(make_field(2), 8, 2)
    assert len(enumerate_subspaces(make_field(3), 6, 5, point_limit=400)) == 364


def test_enumerate_is_deterministic():
    a = enumerate_subspaces(make_field(4), 3, 2)
    b = enumerate_subspaces(make_field(4), 3, 2)
    assert [s.basis for s in a] == [s.basis for s in b]
