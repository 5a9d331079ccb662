"""Exact lower bounds on crossing numbers from vertex and edge counts.

Five linear inequalities hold for every graph on n >= 3 vertices, numbered
(1)-(5) from sparse to dense:

  (1)  cr(G) >= m - 3(n-2)
  (2)  cr(G) >= 7m/3 - 25(n-2)/3
  (3)  cr(G) >= 3m - 35(n-2)/3
  (4)  cr(G) >= 4m - 103(n-2)/6
  (5)  cr(G) >= 5m - 25(n-2)

Two cubic "crossing lemma" forms follow by sampling:

  cr(G) >= m^3 / (64 n^2)          for m >= 4n
  cr(G) >= m^3 / (31.1 n^2)        for m >= 103n/16

Sampling each vertex independently with probability p and applying (4) to the
sampled subgraph gives, for n >= 10 and 0 < p <= 1,

  cr(G) >= cr(n,m,p) = 4m/p^2 - 103n/(6p^3) + 103/(3p^4) - 5n^2(1-p)^(n-2)/p^4

`optimize_p` picks a near-optimal p on the 1/1000 grid; soundness never
depends on optimality, since every p in (0,1] yields a valid bound.

A deterministic counting variant averages a linear rule over all spanned
s-vertex subgraphs: each edge lies in C(n-2, s-2) of them and each crossing
of an optimal drawing in at most C(n-4, s-4), so

  cr(G) >= [a*m*C(n-2,s-2) - b*(s-2)*C(n,s)] / C(n-4,s-4).

Reference values for complete graphs: the Zarankiewicz count
Z(r) = (1/4)*floor(r/2)*floor((r-1)/2)*floor((r-2)/2)*floor((r-3)/2) is an
upper bound for cr(K_r) (conjectured exact), cr(K_r) >= ceil(0.86*Z(r)) is
the best proven lower bound, and floor(a/2)floor((a-1)/2)floor(b/2)floor((b-1)/2)
is the conjectured cr(K_{a,b}).

All arithmetic is exact; `raw` values are Fractions, `value` = max(0, ceil(raw)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import InapplicableRuleError

_F = Fraction


class RuleId(Enum):
    EQ1 = "eq1"
    EQ2 = "eq2"
    EQ3 = "eq3"
    EQ4 = "eq4"
    EQ5 = "eq5"


@dataclass(frozen=True)
class LinearRule:
    """One inequality cr(G) >= a*m - b*(n-2)."""

    a: Fraction
    b: Fraction
    id: RuleId

    def raw(self, n: int, m: int) -> Fraction:
        return self.a * m - self.b * (n - 2)


LINEAR_RULES: tuple[LinearRule, ...] = (
    LinearRule(_F(1), _F(3), RuleId.EQ1),
    LinearRule(_F(7, 3), _F(25, 3), RuleId.EQ2),
    LinearRule(_F(3), _F(35, 3), RuleId.EQ3),
    LinearRule(_F(4), _F(103, 6), RuleId.EQ4),
    LinearRule(_F(5), _F(25), RuleId.EQ5),
)

RULE_BY_ID: dict[RuleId, LinearRule] = {rule.id: rule for rule in LINEAR_RULES}


@dataclass(frozen=True)
class Method:
    """Provenance of a crossing lower bound: which inequality, which p/s."""

    kind: str  # "linear" | "lemma64" | "lemma311" | "probabilistic" | "counting"
    rule: RuleId | None = None
    p: Fraction | None = None
    s: int | None = None

    def describe(self) -> str:
        if self.kind == "linear":
            return self.rule.value
        if self.kind == "probabilistic":
            return f"probabilistic(p={self.p})"
        if self.kind == "counting":
            return f"counting(s={self.s}, base={self.rule.value})"
        return self.kind


@dataclass(frozen=True)
class CrossingLowerBound:
    """An integer lower bound on cr(G) with its exact pre-ceiling value and
    full provenance."""

    value: int
    raw: Fraction
    method: Method


def _clamp_ceil(raw: Fraction, method: Method) -> CrossingLowerBound:
    # crossing numbers are integers and never negative
    return CrossingLowerBound(value=max(0, math.ceil(raw)), raw=raw, method=method)


@dataclass(frozen=True)
class SamplingParams:
    """Sample size and base inequality for the counting bound."""

    s: int
    base: LinearRule = field(default=RULE_BY_ID[RuleId.EQ4])

    def __post_init__(self):
        if self.s < 5:
            raise ValueError(f"sample size must be >= 5, got {self.s}")


def linear_lower(n: int, m: int) -> CrossingLowerBound:
    """Best of the five linear inequalities; ties go to the lowest-numbered
    rule.  The winner is chosen on raw values, then clamped at 0."""
    if n < 3:
        raise ValueError(f"linear rules need n >= 3, got {n}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    best = max(LINEAR_RULES, key=lambda rule: rule.raw(n, m))
    return _clamp_ceil(best.raw(n, m), Method(kind="linear", rule=best.id))


def zarankiewicz(r: int) -> int:
    """Z(r), the conjectured crossing number of K_r and a proven upper bound."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return (r // 2) * ((r - 1) // 2) * ((r - 2) // 2) * ((r - 3) // 2) // 4


def klerk_lower(r: int) -> int:
    """Best proven lower bound for cr(K_r): ceil(0.86 * Z(r))."""
    return math.ceil(_F(86, 100) * zarankiewicz(r))


def bipartite_zarankiewicz(a: int, b: int) -> int:
    """Conjectured crossing number of K_{a,b} (exact for min(a,b) <= 6)."""
    if a < 1 or b < 1:
        raise ValueError(f"part sizes must be >= 1, got {a}, {b}")
    return (a // 2) * ((a - 1) // 2) * (b // 2) * ((b - 1) // 2)


def crossing_lemma_lower(n: int, m: int) -> CrossingLowerBound:
    """Best applicable cubic bound m^3/(64 n^2) or m^3/(31.1 n^2)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    candidates: list[tuple[Fraction, str]] = []
    if m >= 4 * n:
        candidates.append((_F(m**3, 64 * n**2), "lemma64"))
    if 16 * m >= 103 * n:
        candidates.append((m**3 / (_F(311, 10) * n**2), "lemma311"))
    if not candidates:
        raise InapplicableRuleError(
            f"crossing lemma needs m >= 4n or m >= 103n/16, got n={n}, m={m}"
        )
    raw, kind = max(candidates)
    return _clamp_ceil(raw, Method(kind=kind))


def _as_exact(p) -> Fraction:
    if isinstance(p, float):
        raise TypeError("p must be exact (Fraction, int or string), not float")
    return Fraction(p)


def cr_nmp(n: int, m: int, p) -> CrossingLowerBound:
    """The probabilistic bound cr(n,m,p), evaluated exactly.

    Any rational p in (0,1] gives a valid lower bound; at p = 1 the formula
    collapses to inequality (4).
    """
    p = _as_exact(p)
    if n < 10:
        raise ValueError(f"cr(n,m,p) needs n >= 10, got {n}")
    if not 0 < p <= 1:
        raise ValueError(f"p must be in (0, 1], got {p}")
    raw = (4 * m / p**2
           - _F(103, 6) * n / p**3
           + _F(103, 3) / p**4
           - 5 * n**2 * (1 - p) ** (n - 2) / p**4)
    return _clamp_ceil(raw, Method(kind="probabilistic", p=p))


def optimize_p(n: int, m: int) -> Fraction:
    """Near-optimal sampling probability for cr(n,m,p), on the 1/1000 grid.

    Ignoring the exponentially small tail term, d/dx of the bound written in
    x = 1/p vanishes at the roots of (412/3)x^2 - (103/2)n*x + 8m = 0.  The
    smaller positive root x* is the interior maximum; the returned value is
    1/x* rounded to the nearest 1/1000 (half away from zero) and clamped into
    (0, 1].  If the discriminant is negative or x* <= 1 there is no interior
    optimum and p = 1 is returned.  Everything is computed in exact integer
    arithmetic via isqrt; soundness never depends on the choice.
    """
    if n < 10:
        raise ValueError(f"optimize_p needs n >= 10, got {n}")
    if m < 1:
        raise ValueError(f"optimize_p needs m >= 1, got {m}")
    # discriminant of the quadratic, scaled positive: D = (31827 n^2 - 52736 m)/12
    disc = 31827 * n * n - 52736 * m
    if disc < 0:
        return _F(1)
    # x* <= 1  <=>  (B - 2A)^2 <= D with B = 103n/2, A = 412/3; B > 2A for n >= 10
    if (309 * n - 1648) ** 2 <= 3 * disc:
        return _F(1)
    # 1000/x* = (309000 n + sqrt(N)) / (96 m) with N = 3000000 * disc
    big_n = 3000000 * disc
    p_num, q = 309000 * n, 96 * m
    root = math.isqrt(big_n)
    k = (p_num + root) // q  # floor(1000 p*)
    # round half up: bump iff 1000p* - k >= 1/2, i.e. 2*sqrt(N) >= (2k+1)q - 2*p_num
    rhs = (2 * k + 1) * q - 2 * p_num
    if rhs <= 0 or 4 * big_n >= rhs * rhs:
        k += 1
    return _F(min(max(k, 1), 1000), 1000)


def counting_lower(n: int, m: int, params: SamplingParams) -> CrossingLowerBound:
    """Average a linear rule over all spanned s-vertex subgraphs.

    Exact closed form of the averaging argument: summing a*m_S - b*(s-2) over
    all C(n,s) subsets S uses each edge C(n-2,s-2) times, and each crossing of
    an optimal drawing of G appears in at most C(n-4,s-4) subsets.
    """
    s = params.s
    if s > n:
        raise ValueError(f"sample size s={s} exceeds n={n}")
    a, b = params.base.a, params.base.b
    raw = _F(a * m * math.comb(n - 2, s - 2) - b * (s - 2) * math.comb(n, s),
             math.comb(n - 4, s - 4))
    return _clamp_ceil(raw, Method(kind="counting", rule=params.base.id, s=s))
