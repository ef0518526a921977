"""Small finite fields, projective points and subspace enumeration.

Field elements are integers 0..q-1. For q = p^e with e > 1 the integer's
base-p digits are the polynomial coefficients (digit i is the coefficient
of x^i), reduced modulo a fixed irreducible polynomial.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .exactmath import gaussian_binomial, q_bracket

__all__ = [
    "CapacityError",
    "FieldSpec",
    "Subspace",
    "ProjectiveSpace",
    "DEFAULT_POINT_LIMIT",
    "make_field",
    "projective_space",
    "point_index",
    "point_vector",
    "enumerate_subspaces",
    "hyperplanes",
    "rref",
    "subspace_from_basis",
]

DEFAULT_POINT_LIMIT = 127

# (p, e, coefficients of the monic reduction polynomial, low degree first)
_FIELD_PARAMS = {
    2: (2, 1, None),
    3: (3, 1, None),
    4: (2, 2, (1, 1, 1)),  # x^2 + x + 1
    5: (5, 1, None),
    7: (7, 1, None),
    8: (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, 2, (2, 2, 1)),  # x^2 + 2x + 2
}


class CapacityError(Exception):
    """Instance has more projective points than the configured limit."""


@dataclass(frozen=True, eq=False)
class FieldSpec:
    q: int
    p: int
    e: int
    reduction_polynomial: tuple | None
    add: tuple
    mul: tuple
    neg: tuple
    inv: tuple

    def __repr__(self):
        return f"FieldSpec(q={self.q})"


def _digits(a, p, e):
    return [(a // p**i) % p for i in range(e)]


def _from_digits(digits, p):
    return sum(d * p**i for i, d in enumerate(digits))


def _poly_mul(a, b, p, e, modulus):
    da, db = _digits(a, p, e), _digits(b, p, e)
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce with the monic modulus, highest degree first
    for deg in range(2 * e - 2, e - 1, -1):
        coef = prod[deg]
        if coef:
            for i, m in enumerate(modulus):
                prod[deg - e + i] = (prod[deg - e + i] - coef * m) % p
    return _from_digits(prod[:e], p)


def _verify_field(q, add, mul):
    elems = range(q)
    for a, b in itertools.product(elems, repeat=2):
        if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
            raise ArithmeticError(f"F_{q} tables not commutative at ({a},{b})")
    for a, b, c in itertools.product(elems, repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            raise ArithmeticError(f"F_{q} addition not associative")
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise ArithmeticError(f"F_{q} multiplication not associative")
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            raise ArithmeticError(f"F_{q} not distributive")
    for a in elems:
        if add[0][a] != a or mul[1][a] != a:
            raise ArithmeticError(f"F_{q} identities broken")
        if 0 not in add[a]:
            raise ArithmeticError(f"{a} has no additive inverse in F_{q}")
        if a and 1 not in mul[a]:
            raise ArithmeticError(f"{a} has no multiplicative inverse in F_{q}")


@lru_cache(maxsize=None)
def make_field(q):
    """Build and fully verify the addition/multiplication tables of F_q."""
    if q not in _FIELD_PARAMS:
        raise ValueError(f"unsupported field order {q}; choose from {sorted(_FIELD_PARAMS)}")
    p, e, modulus = _FIELD_PARAMS[q]
    if e == 1:
        add = [[(a + b) % p for b in range(q)] for a in range(q)]
        mul = [[(a * b) % p for b in range(q)] for a in range(q)]
    else:
        add = [
            [_from_digits([(x + y) % p for x, y in zip(_digits(a, p, e), _digits(b, p, e))], p) for b in range(q)]
            for a in range(q)
        ]
        mul = [[_poly_mul(a, b, p, e, modulus) for b in range(q)] for a in range(q)]
    _verify_field(q, add, mul)
    neg = tuple(row.index(0) for row in add)
    inv = (0,) + tuple(mul[a].index(1) for a in range(1, q))
    return FieldSpec(
        q=q,
        p=p,
        e=e,
        reduction_polynomial=modulus,
        add=tuple(tuple(r) for r in add),
        mul=tuple(tuple(r) for r in mul),
        neg=neg,
        inv=inv,
    )


class ProjectiveSpace:
    """Canonical points of PG(n-1, q), indexed in lexicographic order.

    The representative of a point has its first nonzero coordinate equal to 1.
    """

    def __init__(self, field, n, point_limit=DEFAULT_POINT_LIMIT):
        count = q_bracket(n, field.q)
        if count > point_limit:
            raise CapacityError(
                f"F_{field.q}^{n} has {count} points, above the limit {point_limit}"
            )
        self.field = field
        self.n = n
        self.points = [
            v for v in itertools.product(range(field.q), repeat=n) if _first_nonzero(v) == 1
        ]
        assert len(self.points) == count
        self.index = {v: i for i, v in enumerate(self.points)}

    def __len__(self):
        return len(self.points)

    def canonical(self, vector):
        vector = tuple(vector)
        lead = _first_nonzero(vector)
        if lead == 0:
            raise ValueError("the zero vector is not a projective point")
        scale = self.field.inv[lead]
        return tuple(self.field.mul[scale][a] for a in vector)

    def point_index(self, vector):
        return self.index[self.canonical(vector)]

    def mask_of(self, vectors):
        mask = 0
        for v in vectors:
            mask |= 1 << self.point_index(v)
        return mask


def _first_nonzero(vector):
    for a in vector:
        if a:
            return a
    return 0


@lru_cache(maxsize=None)
def projective_space(q, n, point_limit=DEFAULT_POINT_LIMIT):
    return ProjectiveSpace(make_field(q), n, point_limit)


def point_index(vector, q, point_limit=DEFAULT_POINT_LIMIT):
    """Index of the projective point spanned by a nonzero vector over F_q."""
    return projective_space(q, len(vector), point_limit).point_index(vector)


def point_vector(index, q, n, point_limit=DEFAULT_POINT_LIMIT):
    """Canonical representative of the point with the given index."""
    return projective_space(q, n, point_limit).points[index]


@dataclass(frozen=True)
class Subspace:
    """A subspace given by its RREF basis; ``mask`` has bit i set iff point i lies in it."""

    dim: int
    basis: tuple
    mask: int

    @property
    def points(self):
        mask, i, out = self.mask, 0, []
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return out


def _combine(field, coeffs, rows, n):
    add, mul = field.add, field.mul
    out = [0] * n
    for c, row in zip(coeffs, rows):
        if c:
            mc = mul[c]
            out = [add[o][mc[a]] for o, a in zip(out, row)]
    return tuple(out)


def _span_mask(space, rows):
    d = len(rows)
    mask = 0
    # canonical coefficient vectors give canonical points (RREF pivots)
    for coeffs in _canonical_coefficients(space.field.q, d):
        mask |= 1 << space.index[_combine(space.field, coeffs, rows, space.n)]
    return mask


@lru_cache(maxsize=None)
def _canonical_coefficients(q, d):
    return tuple(v for v in itertools.product(range(q), repeat=d) if _first_nonzero(v) == 1)


def _rref_bases(q, n, d):
    for pivots in itertools.combinations(range(n), d):
        # free positions: non-pivot columns to the right of each row's pivot
        free = [(row, col) for row, p in enumerate(pivots) for col in range(p + 1, n) if col not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for row, p in enumerate(pivots):
                rows[row][p] = 1
            for (row, col), v in zip(free, values):
                rows[row][col] = v
            yield tuple(tuple(r) for r in rows)


@lru_cache(maxsize=32)
def _enumerate(q, n, d, point_limit):
    space = projective_space(q, n, point_limit)
    subspaces = tuple(Subspace(d, basis, _span_mask(space, basis)) for basis in _rref_bases(q, n, d))
    assert len(subspaces) == gaussian_binomial(n, d, q)
    return subspaces


def enumerate_subspaces(field, n, d, point_limit=DEFAULT_POINT_LIMIT):
    """All d-dimensional subspaces of F_q^n in RREF order (by pivot set, then entries)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    return list(_enumerate(field.q, n, d, point_limit))


def hyperplanes(field, n, point_limit=DEFAULT_POINT_LIMIT):
    if n < 2:
        raise ValueError(f"hyperplanes need n >= 2, got {n}")
    return enumerate_subspaces(field, n, n - 1, point_limit)


def rref(field, rows):
    """Reduced row echelon form of a list of vectors; zero rows dropped."""
    rows = [list(r) for r in rows]
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    out = []
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in rows if r[col]), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        scale = inv[pivot[col]]
        pivot = [mul[scale][a] for a in pivot]
        for other in rows + out:
            factor = other[col]
            if factor:
                nf = neg[factor]
                other[:] = [add[a][mul[nf][b]] for a, b in zip(other, pivot)]
        out.append(pivot)
    return tuple(tuple(r) for r in out)


def subspace_from_basis(q, n, rows, point_limit=DEFAULT_POINT_LIMIT):
    """Subspace spanned by the given vectors, brought to canonical RREF."""
    field = make_field(q)
    if any(len(r) != n for r in rows):
        raise ValueError(f"vectors must have length {n}")
    basis = rref(field, rows)
    space = projective_space(q, n, point_limit)
    return Subspace(len(basis), basis, _span_mask(space, basis))
