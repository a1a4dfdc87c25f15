"""Reference graphs and brute-force censuses.

These constructions and enumerations are the ground truth that every derived
count and bound is validated against.  Censuses are exact integer
enumeration; floating point appears only in realize_representation, which is
test-support and never feeds a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .params import SrgParams, derive_spectrum

__all__ = [
    "AdjacencyMatrix",
    "construct",
    "srg_parameters",
    "census",
    "CensusReport",
    "lambda_subgraph_edge_counts",
    "realize_representation",
]


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Symmetric, irreflexive boolean matrix stored as per-row bitmasks."""

    n: int
    rows: tuple[int, ...]

    def adjacent(self, u: int, w: int) -> bool:
        return bool(self.rows[u] >> w & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in range(u + 1, self.n) if self.adjacent(u, w)]

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u in range(self.n):
            for w in range(self.n):
                if self.adjacent(u, w):
                    a[u, w] = 1
        return a


def _from_pairs(n: int, pairs) -> AdjacencyMatrix:
    rows = [0] * n
    for u, w in pairs:
        if u == w:
            raise ValueError("loops are not allowed")
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return AdjacencyMatrix(n=n, rows=tuple(rows))


def srg_parameters(g: AdjacencyMatrix) -> SrgParams:
    """Measure (v, k, lam, mu) and verify the defining regularity: constant
    degree and constant common-neighbor counts on adjacent and non-adjacent
    pairs (the entrywise form of A^2 + (mu-lam)A - (k-mu)I = mu J)."""
    n = g.n
    degrees = {g.degree(u) for u in range(n)}
    if len(degrees) != 1:
        raise ValueError(f"graph is not regular: degrees {sorted(degrees)}")
    k = degrees.pop()
    lam_set, mu_set = set(), set()
    for u in range(n):
        for w in range(u + 1, n):
            common = (g.rows[u] & g.rows[w]).bit_count()
            (lam_set if g.adjacent(u, w) else mu_set).add(common)
    if len(lam_set) > 1 or len(mu_set) > 1:
        raise ValueError(f"not strongly regular: lam {sorted(lam_set)}, mu {sorted(mu_set)}")
    lam = lam_set.pop() if lam_set else 0
    mu = mu_set.pop() if mu_set else 0
    return SrgParams(v=n, k=k, lam=lam, mu=mu)


# ---------------------------------------------------------------------------
# constructions


def _petersen() -> AdjacencyMatrix:
    verts = list(combinations(range(5), 2))
    index = {p: i for i, p in enumerate(verts)}
    pairs = [
        (index[a], index[b])
        for a, b in combinations(verts, 2)
        if not set(a) & set(b)
    ]
    return _from_pairs(10, pairs)


def _factorize_prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return (p, e) if q == 1 else None
    return None


def _poly_mul_mod(a, b, modpoly, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by the monic modpoly
    deg = len(modpoly) - 1
    while len(out) > deg:
        lead = out.pop()
        if lead:
            for i in range(deg):
                out[-deg + i] = (out[-deg + i] - lead * modpoly[i]) % p
    while len(out) < deg:
        out.append(0)
    return tuple(c % p for c in out)


def _irreducible_poly(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible polynomial of degree e over GF(p), coefficients
    constant-first without the leading 1, found by trial division."""

    def divides(div, poly):
        rem = list(poly)
        dd = len(div) - 1
        while len(rem) - 1 >= dd:
            lead = rem[-1]
            if lead:
                shift = len(rem) - 1 - dd
                for i, c in enumerate(div):
                    rem[shift + i] = (rem[shift + i] - lead * c) % p
            rem.pop()
        return all(c == 0 for c in rem)

    def monic_polys(deg):
        for coeffs in _tuples(p, deg):
            yield list(coeffs) + [1]

    def _tuples(base, length):
        if length == 0:
            yield ()
            return
        for rest in _tuples(base, length - 1):
            for c in range(base):
                yield rest + (c,)

    for candidate in monic_polys(e):
        if candidate[0] == 0:
            continue
        reducible = False
        for d in range(1, e // 2 + 1):
            for div in monic_polys(d):
                if divides(div, candidate):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(candidate)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


def _paley(q: int) -> AdjacencyMatrix:
    if q > 101:
        raise ValueError(f"paley order limited to 101, got {q}")
    pp = _factorize_prime_power(q)
    if pp is None or q % 4 != 1:
        raise ValueError(f"paley order must be a prime power = 1 mod 4, got {q}")
    p, e = pp
    if e == 1:
        squares = {x * x % q for x in range(1, q)}
        pairs = [(u, w) for u in range(q) for w in range(u + 1, q) if (u - w) % q in squares]
        return _from_pairs(q, pairs)
    modpoly = _irreducible_poly(p, e)

    def build(length):
        if length == 0:
            return [()]
        return [rest + (c,) for rest in build(length - 1) for c in range(p)]

    elements = build(e)
    index = {el: i for i, el in enumerate(elements)}
    squares = set()
    for el in elements:
        if any(el):
            squares.add(_poly_mul_mod(el, el, modpoly, p))
    pairs = []
    for a, b in combinations(elements, 2):
        diff = tuple((x - y) % p for x, y in zip(a, b))
        if diff in squares:
            pairs.append((index[a], index[b]))
    return _from_pairs(q, pairs)


def _triangular(n: int) -> AdjacencyMatrix:
    if not 5 <= n <= 10:
        raise ValueError(f"triangular order limited to 5..10, got {n}")
    verts = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(verts)}
    pairs = [
        (index[a], index[b])
        for a, b in combinations(verts, 2)
        if set(a) & set(b)
    ]
    return _from_pairs(len(verts), pairs)


def _rook(n: int) -> AdjacencyMatrix:
    if not 3 <= n <= 8:
        raise ValueError(f"rook order limited to 3..8, got {n}")
    pairs = []
    for i1 in range(n):
        for j1 in range(n):
            for i2 in range(n):
                for j2 in range(n):
                    a, b = i1 * n + j1, i2 * n + j2
                    if a < b and (i1 == i2) != (j1 == j2):
                        pairs.append((a, b))
    return _from_pairs(n * n, pairs)


def construct(name: str, order: int | None = None) -> AdjacencyMatrix:
    """Build a reference strongly regular graph and verify its regularity.

    Families: "petersen"; "paley" (prime power order = 1 mod 4, <= 101);
    "triangular" (5 <= order <= 10); "rook" (3 <= order <= 8).
    """
    if name == "petersen":
        if order is not None:
            raise ValueError("petersen takes no order")
        g = _petersen()
    elif name == "paley":
        if order is None:
            raise ValueError("paley needs an order")
        g = _paley(order)
    elif name == "triangular":
        if order is None:
            raise ValueError("triangular needs an order")
        g = _triangular(order)
    elif name == "rook":
        if order is None:
            raise ValueError("rook needs an order")
        g = _rook(order)
    else:
        raise ValueError(f"unknown family {name!r}")
    srg_parameters(g)  # raises if the construction is broken
    return g


# ---------------------------------------------------------------------------
# censuses


@dataclass(frozen=True)
class CensusReport:
    """Brute-force pair census.

    vertex_edge_class_counts orders: endpoint, adjacent-to-both,
    adjacent-to-one, adjacent-to-neither, counted over (vertex, edge) pairs.
    shared_edge_class_counts orders: third endpoints adjacent, non-adjacent,
    over unordered pairs of distinct edges sharing a vertex.  n_j_disjoint
    counts unordered disjoint pairs with j cross adjacencies.
    """

    k4_count: int
    n_j_disjoint: tuple[int, int, int, int, int]
    vertex_edge_class_counts: tuple[int, int, int, int]
    shared_edge_class_counts: tuple[int, int]
    max_lambda_subgraph_edges: int


def lambda_subgraph_edge_counts(g: AdjacencyMatrix) -> list[int]:
    """Edge count of the subgraph induced on the common neighborhood of each
    edge, by explicit pair enumeration."""
    counts = []
    for u, w in g.edges():
        common = g.rows[u] & g.rows[w]
        members = [t for t in range(g.n) if common >> t & 1]
        m = sum(1 for a, b in combinations(members, 2) if g.adjacent(a, b))
        counts.append(m)
    return counts


def census(g: AdjacencyMatrix) -> CensusReport:
    """Exhaustive enumeration of 4-cliques, (vertex, edge) classes, and edge
    pair classes."""
    edges = g.edges()

    k4 = 0
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if not g.adjacent(u, w):
                continue
            common = g.rows[u] & g.rows[w]
            members = [t for t in range(g.n) if common >> t & 1 and t > w]
            for i, t in enumerate(members):
                for z in members[i + 1 :]:
                    if g.adjacent(t, z):
                        k4 += 1

    ve = [0, 0, 0, 0]
    for t in range(g.n):
        for u, w in edges:
            if t == u or t == w:
                ve[0] += 1
            else:
                hits = g.adjacent(t, u) + g.adjacent(t, w)
                ve[{2: 1, 1: 2, 0: 3}[hits]] += 1

    shared = [0, 0]
    n_j = [0, 0, 0, 0, 0]
    for i, (u, w) in enumerate(edges):
        for u2, w2 in edges[i + 1 :]:
            joint = {u, w} & {u2, w2}
            if joint:
                (a,) = joint
                b = w if u == a else u
                b2 = w2 if u2 == a else u2
                shared[0 if g.adjacent(b, b2) else 1] += 1
            else:
                j = (
                    g.adjacent(u, u2)
                    + g.adjacent(u, w2)
                    + g.adjacent(w, u2)
                    + g.adjacent(w, w2)
                )
                n_j[j] += 1

    m_counts = lambda_subgraph_edge_counts(g)
    return CensusReport(
        k4_count=k4,
        n_j_disjoint=tuple(n_j),
        vertex_edge_class_counts=tuple(ve),
        shared_edge_class_counts=tuple(shared),
        max_lambda_subgraph_edges=max(m_counts, default=0),
    )


def realize_representation(g: AdjacencyMatrix, tol: float = 1e-8) -> np.ndarray:
    """Approximate unit vectors of the eigenspace representation (test-only
    floating point).

    Row u is x_u in R^g, obtained by scaling the orthonormal eigenbasis of
    the negative eigenvalue s so that the Gram matrix is (v/g) P with P the
    eigenprojector; pairwise inner products then match p and q within tol.
    """
    params = srg_parameters(g)
    spectrum = derive_spectrum(params)
    if spectrum is None:
        raise ValueError("irrational eigenvalues: no rational representation")
    a = g.to_numpy().astype(float)
    eigvals, eigvecs = np.linalg.eigh(a)
    mask = np.abs(eigvals - spectrum.s) < 1e-6
    if int(mask.sum()) != spectrum.g:
        raise ValueError(
            f"eigenspace dimension {int(mask.sum())} != expected {spectrum.g}"
        )
    basis = eigvecs[:, mask]
    vectors = basis * math.sqrt(params.v / spectrum.g)
    gram = vectors @ vectors.T
    p = spectrum.s / params.k
    q = -(1 + spectrum.s) / (params.v - 1 - params.k)
    for u in range(params.v):
        if abs(gram[u, u] - 1.0) > tol:
            raise ValueError("representation vectors are not unit length")
        for w in range(u + 1, params.v):
            want = p if g.adjacent(u, w) else q
            if abs(gram[u, w] - want) > tol:
                raise ValueError("representation inner products drift beyond tolerance")
    return vectors
