"""Lower and upper bounds on A_q(n, 2t; t), the maximum partial t-spread size."""

from dataclasses import dataclass, field

from .exactmath import ceil_bound_term, exact_div, q_bracket, q_pow, q_valuation
from .vsp_analysis import (
    HoleType,
    exclude_hole_type,
    lemma8_family,
    spread_hole_bound,
    tau,
)

__all__ = [
    "VALID_Q",
    "METHODS",
    "SpreadInstance",
    "BoundResult",
    "BestBounds",
    "decompose",
    "lower_bound_construction",
    "packing_bound",
    "theorem1_bound",
    "theorem2_bound",
    "drake_freeman_bound",
    "best_bounds",
    "all_bounds",
]

VALID_Q = (2, 3, 4, 5, 7, 8, 9)
METHODS = ("Construction", "Packing", "Theorem1", "Theorem2", "DrakeFreeman", "Oracle")

# tie-break order when several upper bounds share the minimum
_UPPER_PREFERENCE = {"Theorem1": 0, "Theorem2": 1, "Packing": 2}
_MAX_CERT_ROWS = 12


@dataclass(frozen=True)
class SpreadInstance:
    q: int
    n: int
    t: int
    k: int
    r: int
    l: int

    def __post_init__(self):
        if self.q not in VALID_Q:
            raise ValueError(f"q={self.q} is not a supported prime power {VALID_Q}")
        if self.n != self.k * self.t + self.r or not 0 <= self.r < self.t or self.k < 1:
            raise ValueError(f"inconsistent decomposition n={self.n}, k={self.k}, t={self.t}, r={self.r}")
        lhs = self.l * (q_pow(self.q, self.t) - 1)
        if lhs != q_pow(self.q, self.n - self.t) - q_pow(self.q, self.r):
            raise ValueError(f"l={self.l} does not satisfy l(q^t - 1) = q^(n-t) - q^r")

    @property
    def rq(self):
        return q_bracket(self.r, self.q)

    @property
    def qt(self):
        return q_pow(self.q, self.t)

    @property
    def base(self):
        """l q^t, the size of the construction minus one."""
        return self.l * self.qt


@dataclass
class BoundResult:
    value: int
    direction: str  # "lower" or "upper"
    method: str
    params: dict = field(default_factory=dict)
    certificate: list[str] = field(default_factory=list)


@dataclass
class BestBounds:
    instance: SpreadInstance
    lower: BoundResult
    upper: BoundResult

    @property
    def exact(self):
        return self.lower.value == self.upper.value


def decompose(q, n, t):
    """Split n = k t + r and compute l = (q^(n-t) - q^r)/(q^t - 1)."""
    if q not in VALID_Q:
        raise ValueError(f"q={q} is not a supported prime power {VALID_Q}")
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if n < t:
        raise ValueError(f"need n >= t, got n={n}, t={t}")
    k, r = divmod(n, t)
    l = exact_div(q_pow(q, n - t) - q_pow(q, r), q_pow(q, t) - 1)
    return SpreadInstance(q=q, n=n, t=t, k=k, r=r, l=l)


def _label(inst):
    return f"A_{inst.q}({inst.n},{2 * inst.t};{inst.t})"


def lower_bound_construction(inst):
    # l q^t + 1 also covers k = 1 (l = 0) and r = 0 (the full spread)
    value = inst.base + 1
    if inst.k == 1:
        note = f"n={inst.n} < 2t: any two {inst.t}-subspaces meet, a single subspace is optimal"
    elif inst.r == 0:
        note = f"r = 0: a {inst.t}-spread of F_{inst.q}^{inst.n} exists with (q^n-1)/(q^t-1) = {value} members"
    else:
        note = f"known construction gives l*q^t + 1 = {inst.l}*{inst.qt} + 1 = {value} members"
    return BoundResult(value, "lower", "Construction", {}, [f"{_label(inst)} >= {value}", note])


def packing_bound(inst):
    points = q_bracket(inst.n, inst.q)
    per_member = q_bracket(inst.t, inst.q)
    value = points // per_member
    cert = [
        f"{_label(inst)} <= floor([{inst.n}]_{inst.q} / [{inst.t}]_{inst.q}) "
        f"= floor({points} / {per_member}) = {value}"
    ]
    return BoundResult(value, "upper", "Packing", {}, cert)


def _theorem1_certificate(inst, z, u):
    q, t = inst.q, inst.t
    x, y = 2 + z * (q - 1), z + 1
    hb = spread_hole_bound(q, t, inst.r, z, u, x, y, n=inst.n)
    cert = [f"assume {inst.base} + {x} members (x = 2 + z(q-1) = {x}, y = z + 1 = {y})"]
    cert.extend(hb.steps)
    if z == 0:
        assert hb.L_max < 0
        cert.append(f"L <= {hb.L_max} < 0: contradiction")
        return cert
    # L is i q^y - [y]_q + y - 1 with 1 <= i <= y - 1: each value is ruled out
    for i, c in lemma8_family(q, t, y):
        verdict = exclude_hole_type(q, hb.subspace_dim, HoleType(t, y, c))
        assert verdict.excluded, verdict.trace
        cert.append(
            f"i={i}: hole-type ({t},{y},{c}) in dimension {hb.subspace_dim} "
            f"excluded with m={verdict.witness_m}, F={verdict.f_value}"
        )
    cert.append("every admissible hole count excluded: contradiction")
    return cert


def theorem1_bound(inst):
    """Upper bound l q^t + 1 + z(q-1) for the smallest admissible z.

    Returns None when k < 2, r = 0 or the smallest z exceeds [r]_q / 2.
    """
    if inst.k < 2 or inst.r < 1 or inst.t <= inst.r:
        return None
    rq = inst.rq
    z = max(0, rq + 1 - inst.t)
    if 2 * z > rq:
        return None
    u = inst.t - (rq + 1 - z)
    value = inst.base + 1 + z * (inst.q - 1)
    cert = [f"{_label(inst)} <= l*q^t + 1 + z(q-1) = {value} with z={z}, u={u}"]
    cert.extend(_theorem1_certificate(inst, z, u))
    return BoundResult(value, "upper", "Theorem1", {"z": z, "u": u}, cert)


def _theorem2_terms(inst, ys):
    q = inst.q
    z = inst.rq + 1 - inst.t
    out = []
    for y in ys:
        lam = q_pow(q, y)
        d = 1 + 4 * lam * (lam - (z + y - 1) * (q - 1) - 1)
        if d < 1:
            continue
        out.append((ceil_bound_term(lam, d), y, d))
    return out


def _theorem2_certificate(inst, z, y, x):
    q, t = inst.q, inst.t
    lam = q_pow(q, y)
    hb = spread_hole_bound(q, t, inst.r, z, 0, x, y, n=inst.n)
    cert = [f"assume {inst.base} + {x} members"]
    cert.extend(hb.steps)
    bracket = q_bracket(y, q)
    delta = q_pow(q, y - 1)
    top = z + y - 1
    # i = top is the strongest restriction; list all i only when few
    indices = range(1, top + 1) if top <= _MAX_CERT_ROWS else [top]
    if top > _MAX_CERT_ROWS:
        cert.append(f"{top} values of i; showing only the binding one i={top}")
    for i in indices:
        c = i * lam - (x - 1) * bracket
        m = i * (q - 1) - (x - 1) + 1
        value = tau(q, c, delta, m)
        line = f"i={i}: c={c}, m={m}, tau={value}"
        if c < 0:
            line += ", negative hole count"
        elif y >= 2:
            verdict = exclude_hole_type(q, hb.subspace_dim, HoleType(t, y, c))
            line += f", hole-type ({t},{y},{c}) {verdict.status}"
        cert.append(line)
    return cert


def _theorem2_result(inst, ys, method):
    if inst.k < 2 or inst.r < 1 or inst.t <= inst.r:
        return None
    z = inst.rq + 1 - inst.t
    if z < 0:
        return None
    terms = _theorem2_terms(inst, ys)
    if not terms:
        return None
    term, y, d = min(terms, key=lambda item: (item[0], item[1]))
    x = term + 1
    assert x >= 2, f"x={x} < 2 for {_label(inst)}, y={y}"
    assert q_valuation(x - 1, inst.q) <= y
    value = inst.base + term
    cert = [
        f"{_label(inst)} <= l*q^t + ceil(lambda - 1/2 - sqrt(d)/2) = {inst.base} + {term} = {value}",
        f"z={z}, y={y}, lambda={inst.q}^{y}, d={d}, x={x}",
    ]
    cert.append("terms by y: " + ", ".join(f"y={yy}:{tt}" for tt, yy, _ in sorted(terms, key=lambda a: a[1])))
    cert.extend(_theorem2_certificate(inst, z, y, x))
    return BoundResult(value, "upper", method, {"z": z, "y": y, "x": x}, cert)


def theorem2_bound(inst):
    """Upper bound minimised over y in [max(r, 2), t]; None if inapplicable."""
    return _theorem2_result(inst, range(max(inst.r, 2), inst.t + 1), "Theorem2")


def drake_freeman_bound(inst):
    """Theorem 2 restricted to y = t."""
    if inst.t < max(inst.r, 2):
        return None
    return _theorem2_result(inst, [inst.t], "DrakeFreeman")


def _short_circuit_upper(inst):
    if inst.k == 1:
        return BoundResult(
            1,
            "upper",
            "Packing",
            {},
            [f"{_label(inst)} <= 1: n < 2t, so two {inst.t}-subspaces always meet"],
        )
    return None


def best_bounds(q, n, t):
    inst = decompose(q, n, t)
    lower = lower_bound_construction(inst)
    upper = _short_circuit_upper(inst)
    if upper is None:
        candidates = [b for b in (theorem1_bound(inst), theorem2_bound(inst), packing_bound(inst)) if b]
        upper = min(candidates, key=lambda b: (b.value, _UPPER_PREFERENCE[b.method]))
    assert lower.value <= upper.value, (lower, upper)
    return BestBounds(inst, lower, upper)


def all_bounds(inst):
    """Every method's result for one instance, None where inapplicable."""
    return {
        "Construction": lower_bound_construction(inst),
        "Packing": _short_circuit_upper(inst) or packing_bound(inst),
        "Theorem1": theorem1_bound(inst),
        "Theorem2": theorem2_bound(inst),
        "DrakeFreeman": drake_freeman_bound(inst),
    }
