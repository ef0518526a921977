"""Brute-force maximum partial spreads and empirical checks of the counting identities."""

import hashlib
import random
import time
from dataclasses import dataclass, field

from .bounds import BoundResult, best_bounds, decompose
from .exactmath import q_bracket, q_pow
from .galois import (
    DEFAULT_POINT_LIMIT,
    enumerate_subspaces,
    hyperplanes,
    make_field,
    subspace_from_basis,
)
from .vsp_analysis import HoleType, exclude_hole_type, hyperplane_congruence, lemma8_family

__all__ = [
    "SearchBudget",
    "PartialSpread",
    "SearchResult",
    "HoleDistribution",
    "CrossCheckError",
    "CrossCheckReport",
    "max_partial_spread",
    "greedy_partial_spread",
    "hole_distribution",
    "verify_standard_equations",
    "verify_hyperplane_congruences",
    "cross_check",
    "oracle_bound",
    "format_witness",
    "parse_witness",
]

_HEX = "0123456789abcdef"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 5_000_000
    max_seconds: float = 60.0
    mode: str = "exact"  # "exact" or "greedy"

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("search budget limits must be positive")
        if self.mode not in ("exact", "greedy"):
            raise ValueError(f"unknown search mode {self.mode!r}")


@dataclass
class PartialSpread:
    instance: object
    members: list
    point_limit: int = DEFAULT_POINT_LIMIT

    def __post_init__(self):
        t = self.instance.t
        covered = 0
        for member in self.members:
            if member.dim != t:
                raise ValueError(f"member of dimension {member.dim}, expected {t}")
            if covered & member.mask:
                raise ValueError("members do not intersect trivially")
            covered |= member.mask
        self.covered = covered
        total = q_bracket(self.instance.n, self.instance.q)
        self.holes = ((1 << total) - 1) & ~covered
        assert self.hole_count == total - len(self.members) * q_bracket(t, self.instance.q)

    @property
    def size(self):
        return len(self.members)

    @property
    def hole_count(self):
        return bin(self.holes).count("1")


@dataclass
class SearchResult:
    size: int
    witness: PartialSpread
    proven_optimal: bool
    nodes: int = 0
    elapsed: float = 0.0


@dataclass
class HoleDistribution:
    a: dict
    c: int
    n: int
    q: int


class _BudgetExhausted(Exception):
    pass


def _popcount(x):
    return bin(x).count("1")


def _first_member(subspaces, t):
    for s in subspaces:
        if all(s.basis[i][j] == (1 if i == j else 0) for i in range(t) for j in range(len(s.basis[0]))):
            return s
    raise AssertionError("span of the first t unit vectors not found")


def greedy_partial_spread(q, n, t, rng=None, point_limit=DEFAULT_POINT_LIMIT):
    """Random maximal partial spread: shuffle all t-subspaces, keep each disjoint one."""
    rng = rng if rng is not None else random.Random()
    inst = decompose(q, n, t)
    subspaces = enumerate_subspaces(make_field(q), n, t, point_limit)
    order = list(range(len(subspaces)))
    rng.shuffle(order)
    covered, members = 0, []
    for i in order:
        s = subspaces[i]
        if not covered & s.mask:
            covered |= s.mask
            members.append(s)
    return PartialSpread(inst, members, point_limit)


def max_partial_spread(q, n, t, budget=None, seed=None, point_limit=DEFAULT_POINT_LIMIT, stop_at=None):
    """Largest partial t-spread of F_q^n found within the budget.

    Exact mode fixes the first member to the span of the first t unit
    vectors, then branches on the uncovered point with the fewest fitting
    t-subspaces: either one of them is added, or the point becomes a hole. Branches are cut when the remaining free points
    cannot beat the incumbent, and the search stops once the incumbent meets
    the best known upper bound (or ``stop_at`` when given).
    """
    budget = budget or SearchBudget()
    inst = decompose(q, n, t)
    subspaces = enumerate_subspaces(make_field(q), n, t, point_limit)
    upper = best_bounds(q, n, t).upper.value if stop_at is None else stop_at
    start = time.monotonic()

    if budget.mode == "greedy":
        spread = greedy_partial_spread(q, n, t, random.Random(seed), point_limit)
        return SearchResult(spread.size, spread, spread.size == upper, 0, time.monotonic() - start)

    total = q_bracket(n, q)
    per_member = q_bracket(t, q)
    full = (1 << total) - 1
    through = [[] for _ in range(total)]
    for s in subspaces:
        mask = s.mask
        while mask:
            low = mask & -mask
            through[low.bit_length() - 1].append(s)
            mask ^= low

    first = _first_member(subspaces, t)
    best = [first]
    # seed the incumbent with a greedy completion of the fixed first member
    covered = first.mask
    for s in subspaces:
        if not s.mask & covered:
            covered |= s.mask
            best.append(s)
    chosen = [first]
    nodes = 0

    def search(used):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget.max_nodes or (nodes & 255 == 0 and time.monotonic() - start > budget.max_seconds):
            raise _BudgetExhausted
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= upper:
            return True
        # points no remaining subspace can cover are forced holes
        free = full & ~used
        options = None
        mask = free
        while mask:
            low = mask & -mask
            mask ^= low
            fits = [s for s in through[low.bit_length() - 1] if not s.mask & used]
            if not fits:
                used |= low
                free ^= low
            elif options is None or len(fits) < len(options):
                options, branch_point = fits, low
        if len(chosen) + _popcount(free) // per_member <= len(best):
            return False
        for s in options:
            chosen.append(s)
            done = search(used | s.mask)
            chosen.pop()
            if done:
                return True
        return search(used | branch_point)

    try:
        search(first.mask)
        proven = True
    except _BudgetExhausted:
        proven = len(best) >= upper
    spread = PartialSpread(inst, best, point_limit)
    return SearchResult(spread.size, spread, proven, nodes, time.monotonic() - start)


def hole_distribution(spread):
    """Count hyperplanes by the number of holes they contain."""
    inst = spread.instance
    a = {}
    for h in hyperplanes(make_field(inst.q), inst.n, spread.point_limit):
        i = _popcount(h.mask & spread.holes)
        a[i] = a.get(i, 0) + 1
    return HoleDistribution(dict(sorted(a.items())), spread.hole_count, inst.n, inst.q)


def verify_standard_equations(dist):
    """Check the three hyperplane counting identities.

    Returns (ok, residuals) with residuals = observed - expected for
    sum a_i, sum i a_i and sum i(i-1) a_i.
    """
    q, n, c = dist.q, dist.n, dist.c
    observed = (
        sum(dist.a.values()),
        sum(i * a for i, a in dist.a.items()),
        sum(i * (i - 1) * a for i, a in dist.a.items()),
    )
    expected = (
        q_bracket(n, q),
        c * q_bracket(n - 1, q),
        c * (c - 1) * q_bracket(n - 2, q) if n >= 2 else 0,
    )
    residuals = [o - e for o, e in zip(observed, expected)]
    return all(r == 0 for r in residuals), residuals


def verify_hyperplane_congruences(spread):
    """Check every hyperplane's hole count against the predicted residue.

    Returns (ok, report); report holds residue, modulus, x and the list of
    violating hyperplane indices.
    """
    inst = spread.instance
    if spread.size < 1:
        raise ValueError("congruence needs at least one member")
    if inst.t < 2:
        raise ValueError("congruence needs t >= 2")
    qt = q_pow(inst.q, inst.t)
    if spread.size >= inst.base:
        x = spread.size - inst.base
    else:
        x = spread.size % qt
    residue, modulus = hyperplane_congruence(spread.hole_count, x, inst.q, inst.t)
    violations = []
    planes = hyperplanes(make_field(inst.q), inst.n, spread.point_limit)
    for idx, h in enumerate(planes):
        if _popcount(h.mask & spread.holes) % modulus != residue:
            violations.append(idx)
    report = {
        "x": x,
        "m1": spread.hole_count,
        "residue": residue,
        "modulus": modulus,
        "hyperplanes": len(planes),
        "violations": violations,
    }
    return not violations, report


class CrossCheckError(AssertionError):
    pass


@dataclass
class CrossCheckReport:
    q: int
    n: int
    t: int
    size: int
    proven_optimal: bool
    lower: int
    upper: int
    exact: bool
    checks: list = field(default_factory=list)


def cross_check(q, n, t, budget=None, point_limit=DEFAULT_POINT_LIMIT):
    """Run the oracle and test it against the bounds; raises CrossCheckError on mismatch."""
    result = max_partial_spread(q, n, t, budget, point_limit=point_limit)
    bb = best_bounds(q, n, t)
    spread = result.witness
    checks = []
    failures = []

    def check(ok, text):
        checks.append(("pass" if ok else "FAIL") + ": " + text)
        if not ok:
            failures.append(text)

    check(bb.lower.value <= result.size <= bb.upper.value,
          f"{bb.lower.value} <= size {result.size} <= {bb.upper.value}")
    if result.proven_optimal and bb.exact:
        check(result.size == bb.upper.value, f"optimum {result.size} equals exact value {bb.upper.value}")
    if t >= 2 and n > t and spread.size >= 1:
        family = [c for _, c in lemma8_family(q, t, t)]
        check(spread.hole_count not in family,
              f"hole count {spread.hole_count} avoids excluded family {family}")
        if n >= 2 * t:
            verdict = exclude_hole_type(q, n, HoleType(t, t, spread.hole_count))
            check(not verdict.excluded,
                  f"realised hole-type ({t},{t},{spread.hole_count}) is not excluded")
    report = CrossCheckReport(q, n, t, result.size, result.proven_optimal,
                              bb.lower.value, bb.upper.value, bb.exact, checks)
    if failures:
        raise CrossCheckError("; ".join(failures))
    return report, result


def oracle_bound(result):
    """Wrap a search result as a lower bound tagged with a witness fingerprint."""
    digest = hashlib.sha1(format_witness(result.witness).encode()).hexdigest()[:12]
    inst = result.witness.instance
    cert = [f"explicit partial {inst.t}-spread of size {result.size} in F_{inst.q}^{inst.n}"]
    if result.proven_optimal:
        cert.append("search exhausted: size is optimal")
    return BoundResult(result.size, "lower", "Oracle", {"witness": digest}, cert)


def format_witness(spread):
    """One member per line; RREF rows as hex-digit strings separated by spaces."""
    inst = spread.instance
    lines = [
        f"# partial spread q={inst.q} n={inst.n} t={inst.t} size={spread.size}",
        f"# holes={spread.hole_count}",
    ]
    for member in spread.members:
        lines.append(" ".join("".join(_HEX[a] for a in row) for row in member.basis))
    return "\n".join(lines) + "\n"


def parse_witness(text, point_limit=DEFAULT_POINT_LIMIT):
    """Inverse of format_witness; validates disjointness."""
    params = {}
    bases = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                if "=" in token:
                    key, value = token.split("=", 1)
                    params[key] = int(value)
            continue
        bases.append(tuple(tuple(_HEX.index(ch) for ch in row) for row in line.split()))
    try:
        q, n, t = params["q"], params["n"], params["t"]
    except KeyError as exc:
        raise ValueError(f"witness header missing {exc}") from None
    members = []
    for basis in bases:
        if any(len(row) != n or max(row) >= q for row in basis):
            raise ValueError(f"malformed member {basis}")
        member = subspace_from_basis(q, n, basis, point_limit)
        if member.basis != basis or member.dim != t:
            raise ValueError(f"member {basis} is not a {t}-dimensional RREF basis")
        members.append(member)
    return PartialSpread(decompose(q, n, t), members, point_limit)
