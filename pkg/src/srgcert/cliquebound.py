"""Lower bound on the number of 4-cliques from positive-definite sphere
polynomials.

The unit-vector system is the v vertex vectors together with one normalized
vector y_e = (x_u + x_w)/|x_u + x_w| per edge.  Its inner-product
distribution is determined by (v, k, lam, mu) and the 4-clique count alone;
applying an even Gegenbauer polynomial entrywise to the Gram matrix keeps it
positive semidefinite, and evaluating the quadratic form at weight 1 on
vertex vectors and a on edge vectors yields an inequality affine in the
4-clique count.  Everything is exact: irrational inner products only ever
enter through their rational squares, which even polynomials consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .params import SrgParams
from .representation import ReprConstants

__all__ = [
    "gegenbauer_eval",
    "PairClass",
    "PairProfile",
    "pair_profile",
    "K4Bound",
    "k4_lower_bound",
]

MAX_DEGREE = 8


@lru_cache(maxsize=None)
def _gegenbauer_coeffs(d: int, t: int) -> tuple[Fraction, ...]:
    """Coefficients (constant first) of the degree-t Gegenbauer polynomial
    for the sphere S^{d-1}, normalized to take value 1 at x = 1.

    Built from the classical three-term recurrence
    n C_n = 2(n - 1 + nu) x C_{n-1} - (n - 2 + 2 nu) C_{n-2},  nu = (d-2)/2.
    """
    nu = Fraction(d - 2, 2)
    polys = [(Fraction(1),), (Fraction(0), 2 * nu)]
    for n in range(2, t + 1):
        prev, prev2 = polys[n - 1], polys[n - 2]
        coeffs = [Fraction(0)] * (n + 1)
        for i, c in enumerate(prev):
            coeffs[i + 1] += 2 * (n - 1 + nu) * c
        for i, c in enumerate(prev2):
            coeffs[i] -= (n - 2 + 2 * nu) * c
        polys.append(tuple(c / n for c in coeffs))
    raw = polys[t]
    at_one = sum(raw)
    return tuple(c / at_one for c in raw)


def gegenbauer_eval(d: int, t: int, x_squared: Fraction, negative: bool = False) -> Fraction:
    """Value of the normalized degree-t Gegenbauer polynomial at x, given
    x^2 and the sign of x.

    Only even t is supported: an even polynomial depends on x^2 alone, which
    keeps the result rational for the square roots occurring in the edge
    vector inner products.  The sign flag is accepted for interface
    completeness but cannot influence an even polynomial.
    """
    if d < 3:
        raise ValueError(f"need d >= 3, got {d}")
    if t % 2 != 0:
        raise ValueError(f"degree must be even, got {t}")
    if not 0 <= t <= MAX_DEGREE:
        raise ValueError(f"degree must be in 0..{MAX_DEGREE}, got {t}")
    x_squared = Fraction(x_squared)
    if x_squared < 0:
        raise ValueError("x_squared must be non-negative")
    coeffs = _gegenbauer_coeffs(d, t)
    assert all(c == 0 for c in coeffs[1::2])
    total = Fraction(0)
    power = Fraction(1)
    for i in range(0, t + 1, 2):
        total += coeffs[i] * power
        power *= x_squared
    return total


@dataclass(frozen=True)
class PairClass:
    """One inner-product class of the vertex+edge vector system.

    value_sq is the squared inner product (always rational); negative records
    the sign of the underlying value.  count is affine in the unknown
    4-clique count K4: count_const + count_k4 * K4.  Counting conventions:
    vertex-vertex counts are over ordered pairs including self-pairs,
    vertex-edge counts are over (vertex, edge) pairs, edge-edge counts are
    over unordered pairs of distinct edges plus a separate self class.
    """

    name: str
    kind: str
    value_sq: Fraction
    negative: bool
    count_const: Fraction
    count_k4: Fraction

    def count_at(self, k4) -> Fraction:
        return self.count_const + self.count_k4 * k4


@dataclass(frozen=True)
class PairProfile:
    """Complete inner-product census of the vertex+edge system, symbolic in K4."""

    params: SrgParams
    rep: ReprConstants
    edge_count: Fraction
    classes: tuple[PairClass, ...]

    def by_name(self, name: str) -> PairClass:
        for cls in self.classes:
            if cls.name == name:
                return cls
        raise KeyError(name)

    def counts_at(self, k4) -> dict[str, Fraction]:
        return {cls.name: cls.count_at(k4) for cls in self.classes}


def _comb2(x) -> Fraction:
    return Fraction(x * (x - 1), 2)


def pair_profile(params: SrgParams, rep: ReprConstants) -> PairProfile:
    """All inner-product classes of {x_u} union {y_e} with counts affine in K4.

    The disjoint edge-pair classes n_j (j = 0..4 cross adjacencies) come from
    4-vertex subgraph counts: a disjoint pair with j cross edges spans a
    4-set inducing a subgraph with j + 2 edges that contains the pair as a
    perfect matching.  Matchings per inducing subgraph: 1 for two disjoint
    edges, 1 for a 4-path, 2 for a 4-cycle, 1 for a triangle-plus-pendant,
    2 for a diamond, 3 for a 4-clique.  The diamond/paw/4-cycle counts are
    affine in K4:

      diamond = |E| C(lam,2) - 6 K4            (edges inside a common
                                                neighborhood pair up with
                                                their base edge)
      paw     = 3 T (k - 2 lam) + 12 K4        (T = v k lam / 6 triangles;
                                                inclusion-exclusion on the
                                                pendant's neighborhood)
      4-cycle = (N C(mu,2) - diamond) / 2      (N = non-adjacent pairs)

    and the two low classes follow from the pair total
    C(|E|,2) - v C(k,2) and the cross-adjacency total |E|((k-1)^2 - lam).
    Every coefficient is validated against brute-force censuses of reference
    graphs in the test suite.
    """
    v, k, lam, mu = params.v, params.k, params.lam, params.mu
    p, q = rep.p, rep.q
    E = params.edge_count
    denom = 2 + 2 * p  # |x_u + x_w|^2

    def sq(value: Fraction) -> tuple[Fraction, bool]:
        return value * value, value < 0

    classes: list[PairClass] = []

    def add(name, kind, value_sq, negative, const, k4=Fraction(0)):
        classes.append(
            PairClass(
                name=name,
                kind=kind,
                value_sq=Fraction(value_sq),
                negative=negative,
                count_const=Fraction(const),
                count_k4=Fraction(k4),
            )
        )

    # vertex-vertex, ordered pairs
    add("vv-self", "vertex-vertex", Fraction(1), False, v)
    vsq, vneg = sq(p)
    add("vv-adjacent", "vertex-vertex", vsq, vneg, v * k)
    vsq, vneg = sq(q)
    add("vv-nonadjacent", "vertex-vertex", vsq, vneg, v * (v - 1 - k))

    # vertex-edge, (vertex, edge) pairs; values c/sqrt(2+2p) stored as c^2/(2+2p)
    for name, c, count in (
        ("ve-endpoint", 1 + p, 2 * E),
        ("ve-both", 2 * p, E * lam),
        ("ve-one", p + q, 2 * E * (k - 1 - lam)),
        ("ve-neither", 2 * q, E * (v - 2 * k + lam)),
    ):
        add(name, "vertex-edge", c * c / denom, c < 0, count)

    # edge-edge: self, sharing a vertex (unordered), disjoint (unordered)
    add("ee-self", "edge-edge-shared", Fraction(1), False, E)
    shared_adj = Fraction(v * k * lam, 2)
    shared_total = v * _comb2(k)
    for name, c, count in (
        ("ee-shared-adjacent", 1 + 3 * p, shared_adj),
        ("ee-shared-nonadjacent", 1 + 2 * p + q, shared_total - shared_adj),
    ):
        add(name, "edge-edge-shared", c * c / (denom * denom), c < 0, count)

    # disjoint pairs by number of cross adjacencies
    triangles = Fraction(v * k * lam, 6)
    nonadj_pairs = Fraction(v * (v - 1 - k), 2)
    diamond = (E * _comb2(lam), Fraction(-6))
    paw = (3 * triangles * (k - 2 * lam), Fraction(12))
    c4 = ((nonadj_pairs * _comb2(mu) - diamond[0]) / 2, -diamond[1] / 2)

    n4 = (Fraction(0), Fraction(3))
    n3 = (2 * diamond[0], 2 * diamond[1])
    n2 = (2 * c4[0] + paw[0], 2 * c4[1] + paw[1])
    cross_total = E * ((k - 1) ** 2 - lam)  # sum over disjoint pairs of j
    n1 = (
        cross_total - 2 * n2[0] - 3 * n3[0] - 4 * n4[0],
        -2 * n2[1] - 3 * n3[1] - 4 * n4[1],
    )
    disjoint_total = _comb2(E) - shared_total
    n0 = (
        disjoint_total - n1[0] - n2[0] - n3[0] - n4[0],
        -n1[1] - n2[1] - n3[1] - n4[1],
    )
    for j, (const, coef) in enumerate((n0, n1, n2, n3, n4)):
        c = (j * p + (4 - j) * q) / denom
        add(f"ee-disjoint-{j}", "edge-edge-disjoint", c * c, c < 0, const, coef)

    return PairProfile(params=params, rep=rep, edge_count=E, classes=tuple(classes))


@dataclass(frozen=True)
class K4Bound:
    """Result of optimizing the quadratic form F(a) = A(a) + B(a) * K4.

    A and B are stored lowest-degree-first; positive semidefiniteness forces
    F(a) >= 0 for the true K4, so whenever B(a) > 0 the count satisfies
    K4 >= -A(a)/B(a).  lower is the ceiling of the optimized rational bound
    (clamped at 0), raw_bound the exact optimum, optimal_a its maximizer
    (None when the optimum is only approached as |a| grows).
    """

    lower: int
    optimal_a: Fraction | None
    a_quadratic: tuple[Fraction, Fraction, Fraction]
    k4_quadratic: tuple[Fraction, Fraction, Fraction]
    raw_bound: Fraction | None
    informative: bool

    def form_value(self, a, k4) -> Fraction:
        a0, a1, a2 = self.a_quadratic
        b0, b1, b2 = self.k4_quadratic
        return a0 + a1 * a + a2 * a * a + (b0 + b1 * a + b2 * a * a) * k4


def k4_lower_bound(params: SrgParams, rep: ReprConstants, degree: int = 4) -> K4Bound:
    """Best 4-clique lower bound obtainable from one even Gegenbauer degree.

    With S_vv, S_ve, S_ee the class-weighted polynomial sums over the
    vertex-vertex, vertex-edge and edge-edge blocks,
    F(a) = S_vv + 2a S_ve + a^2 (S_ee0 + B2 K4) >= 0 for all a.  For B2 > 0
    the bound sup_a -A(a)/B(a) is reached at a* = -S_vv/S_ve with value
    (S_ve^2/S_vv - S_ee0)/B2.
    """
    prof = pair_profile(params, rep)
    d = rep.d
    gval = {
        cls.name: gegenbauer_eval(d, degree, cls.value_sq, cls.negative)
        for cls in prof.classes
    }
    s_vv = sum(cls.count_const * gval[cls.name] for cls in prof.classes if cls.kind == "vertex-vertex")
    s_ve = sum(cls.count_const * gval[cls.name] for cls in prof.classes if cls.kind == "vertex-edge")
    s_ee0 = Fraction(0)
    b2 = Fraction(0)
    for cls in prof.classes:
        if cls.kind == "edge-edge-shared" or cls.kind == "edge-edge-disjoint":
            weight = 1 if cls.name == "ee-self" else 2  # unordered pairs sit twice in the Gram matrix
            s_ee0 += weight * cls.count_const * gval[cls.name]
            b2 += weight * cls.count_k4 * gval[cls.name]

    a_quad = (s_vv, 2 * s_ve, s_ee0)
    k4_quad = (Fraction(0), Fraction(0), b2)

    if b2 <= 0:
        return K4Bound(0, None, a_quad, k4_quad, None, informative=False)
    if s_vv <= 0:
        # F can be driven negative regardless of K4: no graph at all.  Report
        # a bound exceeding any possible count so the range test fires.
        impossible = math.comb(params.v, 4) + 1
        return K4Bound(impossible, Fraction(0), a_quad, k4_quad, None, informative=True)
    if s_ve == 0:
        raw = -s_ee0 / b2
        optimal_a = None  # approached as |a| -> infinity
    else:
        raw = (s_ve * s_ve / s_vv - s_ee0) / b2
        optimal_a = -s_vv / s_ve
    lower = max(0, math.ceil(raw))
    return K4Bound(lower, optimal_a, a_quad, k4_quad, raw, informative=True)
