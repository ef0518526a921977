"""Counting arguments on vector space partitions.

Hole counts in hyperplanes, the descent to smaller subspaces with few
holes, and the quadratic test that rules out hole-types.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import exact_div, q_bracket, q_pow, q_valuation

__all__ = [
    "HoleType",
    "FeasibilityVerdict",
    "HoleBoundTrace",
    "DescentStep",
    "tau",
    "lemma7_test",
    "exclude_hole_type",
    "lemma8_family",
    "hyperplane_congruence",
    "descend_holes",
    "spread_hole_bound",
]


@dataclass(frozen=True)
class HoleType:
    """Partition with members of dimension s..t plus c holes."""

    t: int
    s: int
    c: int

    def __post_init__(self):
        if not self.t >= self.s >= 2:
            raise ValueError(f"hole-type needs t >= s >= 2, got t={self.t}, s={self.s}")
        if self.c < 0:
            raise ValueError(f"hole count must be non-negative, got {self.c}")


@dataclass
class FeasibilityVerdict:
    status: str  # "excluded" or "undecided"
    witness_m: int | None = None
    f_value: int | None = None
    trace: list[str] = field(default_factory=list)

    @property
    def excluded(self):
        return self.status == "excluded"


@dataclass
class HoleBoundTrace:
    m1: int
    x: int
    y: int
    w_residue: int
    L_max: int
    subspace_dim: int
    steps: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class DescentStep:
    b_new: int
    c_new: int
    residue_mod: int
    L_max: int


def tau(q, c, delta, m):
    """The quadratic tau_q(c, delta, m); exact and signed."""
    return (
        m * (m - 1) * delta * delta * q * q
        - c * (2 * m - 1) * (q - 1) * delta * q
        + c * (q - 1) * (c * (q - 1) + 1)
    )


def _scale(q, n, s):
    # q^(n-2) / delta^2 with delta = q^(s-1)
    if n - 2 < 2 * (s - 1):
        raise ValueError(f"need n - 2 >= 2(s - 1), got n={n}, s={s}")
    return q_pow(q, n - 2 - 2 * (s - 1))


def _check_ambient(n, hole_type):
    if n <= hole_type.t:
        raise ValueError(f"ambient dimension {n} must exceed t={hole_type.t}")


def lemma7_test(q, n, hole_type, m):
    """Return tau * q^(n-2)/delta^2 - m(m-1).

    This is (q-1) times a sum of non-negative terms for any real partition,
    so a negative value proves the hole-type cannot occur in F_q^n.
    """
    _check_ambient(n, hole_type)
    delta = q_pow(q, hole_type.s - 1)
    return tau(q, hole_type.c, delta, m) * _scale(q, n, hole_type.s) - m * (m - 1)


def _quadratic_coefficients(q, n, hole_type):
    # F(m) = A m^2 + B m + C
    delta = q_pow(q, hole_type.s - 1)
    scale = _scale(q, n, hole_type.s)
    c = hole_type.c
    a = delta * delta * q * q * scale - 1
    b = (-delta * delta * q * q - 2 * c * (q - 1) * delta * q) * scale + 1
    const = (c * (q - 1) * delta * q + c * (q - 1) * (c * (q - 1) + 1)) * scale
    return a, b, const


def exclude_hole_type(q, n, hole_type):
    """Try to rule out a hole-type via the quadratic test.

    F(m) is convex in m (leading coefficient q^n - 1), so its integer minimum
    sits at one of the two integers next to the rational vertex.
    """
    _check_ambient(n, hole_type)
    a, b, _ = _quadratic_coefficients(q, n, hole_type)
    vertex = Fraction(-b, 2 * a)
    lo, hi = math.floor(vertex), math.ceil(vertex)
    candidates = [lo] if lo == hi else [lo, hi]
    trace = [
        f"hole-type (t={hole_type.t}, s={hole_type.s}, c={hole_type.c}) in F_{q}^{n}: "
        f"F(m) = tau*q^(n-2)/delta^2 - m(m-1), delta = {q}^{hole_type.s - 1}, "
        f"vertex m* = {vertex}"
    ]
    for m in candidates:
        value = lemma7_test(q, n, hole_type, m)
        trace.append(f"F({m}) = {value}")
        if value < 0:
            trace.append(f"F({m}) < 0: hole-type excluded")
            return FeasibilityVerdict("excluded", witness_m=m, f_value=value, trace=trace)
    trace.append("F(m) >= 0 for all integers m: undecided")
    return FeasibilityVerdict("undecided", trace=trace)


def lemma8_family(q, t, s):
    """Hole counts c = i q^s - [s]_q + s - 1 (1 <= i <= s-1) that cannot occur."""
    if not t >= s >= 2:
        raise ValueError(f"need t >= s >= 2, got t={t}, s={s}")
    base = q_bracket(s, q) - s + 1
    return [(i, i * q_pow(q, s) - base) for i in range(1, s)]


def hyperplane_congruence(m1, x, q, s):
    """Residue of every hyperplane's hole count modulo q^(s-1).

    Returns (residue, modulus).
    """
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    quotient = exact_div(m1 + x - 1, q)
    modulus = q_pow(q, s - 1)
    return quotient % modulus, modulus


def descend_holes(b, c, x, q, s, j):
    """Pass from F_q^n down to an (n-j)-dimensional subspace with few holes.

    Starting from m1 = b q^s + c holes, returns the hole bound
    (b-j) q^(s-j) + c_new with c_new = (c + [j]_q (x-1)) / q^j.
    Each unit step picks a hyperplane with at most the average number of
    holes, which drops the b coefficient by at least one.
    """
    if x < 1:
        raise ValueError(f"x must be at least 1, got {x}")
    # c == 0 gives f = 0 (see q_valuation), i.e. j <= s - 1.
    f = q_valuation(c, q)
    if not 0 <= j <= s - max(1, f):
        raise ValueError(f"j={j} outside [0, {s - max(1, f)}] (s={s}, f={f})")
    c_new = exact_div(c + q_bracket(j, q) * (x - 1), q_pow(q, j))
    modulus = q_pow(q, s - j)
    return DescentStep(
        b_new=b - j,
        c_new=c_new,
        residue_mod=modulus,
        L_max=(b - j) * modulus + c_new,
    )


def spread_hole_bound(q, t, r, z, u, x, y, n=None):
    """Hole bound for a subspace of dimension n - t + y.

    Applies to a partial t-spread with l q^t + x members. ``n`` defaults
    to the smallest admissible ambient dimension 2t + r.
    """
    rq = q_bracket(r, q)
    if t != rq + 1 - z + u:
        raise ValueError(f"t={t} != [r]_q + 1 - z + u = {rq + 1 - z + u}")
    if t <= r:
        raise ValueError(f"need t > r, got t={t}, r={r}")
    if x < 2:
        raise ValueError(f"x must be at least 2, got {x}")
    if min(z, u, r) < 0:
        raise ValueError("z, u, r must be non-negative")
    f = q_valuation(x - 1, q)
    if not max(1, f) <= y <= t:
        raise ValueError(f"y={y} outside [{max(1, f)}, {t}] (f={f})")
    if n is None:
        n = 2 * t + r
    elif n < 2 * t or (n - r) % t:
        raise ValueError(f"n={n} is not k*t + r with k >= 2")

    qt = q_pow(q, t)
    qy = q_pow(q, y)
    m1 = rq * qt - q_bracket(t, q) * (x - 1)
    w = -(x - 1) * q_bracket(y, q)
    L_max = (z + y - 1) * qy + w

    step = descend_holes(rq, -q_bracket(t, q) * (x - 1), x, q, t, t - y)
    # descent gives (z - u + y - 1) q^y + w, never weaker than the stated bound
    assert step.c_new == w and step.L_max <= L_max
    steps = [
        f"partial {t}-spread with l*{q}^{t} + {x} members leaves "
        f"m1 = [{r}]_{q}*{q}^{t} - [{t}]_{q}*{x - 1} = {m1} holes",
        f"descend j = t - y = {t - y} times (s = t = {t}, b = [{r}]_{q} = {rq}, "
        f"c = {-q_bracket(t, q) * (x - 1)}): c_new = {step.c_new}, "
        f"bound {step.L_max}",
        f"subspace U of dimension {n - t + y} has L <= (z+y-1)*{q}^{y} + w = {L_max} holes, "
        f"w = {w}, L = {w % qy} (mod {qy})",
    ]
    return HoleBoundTrace(
        m1=m1,
        x=x,
        y=y,
        w_residue=w % qy,
        L_max=L_max,
        subspace_dim=n - t + y,
        steps=steps,
    )
