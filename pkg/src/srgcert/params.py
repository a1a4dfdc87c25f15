"""Parameter tuples, spectra, and the classical feasibility screens.

Everything on the decision path is exact: integers, fractions.Fraction,
and (for irrational-eigenvalue tuples) elements of a real quadratic field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "InvalidParamsError",
    "SrgParams",
    "Spectrum",
    "FeasibilityReport",
    "derive_spectrum",
    "krein_parameters",
    "krein_q22_zero",
    "classical_feasibility",
    "subconstituent_scan",
]


class InvalidParamsError(ValueError):
    """Raised for tuples outside the admissible (v, k, lam, mu) ranges."""


@dataclass(frozen=True)
class SrgParams:
    """A candidate strongly-regular-graph parameter tuple (v, k, lam, mu).

    Construction enforces the connected, non-complete ranges: 0 < k < v - 1,
    0 <= lam < k, 0 < mu <= k.  The counting identity
    k(k - lam - 1) = (v - k - 1) mu is deliberately *not* a construction
    invariant; tuples violating it are classically infeasible, which is a
    verdict, not a type error (see classical_feasibility).
    """

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        if not (0 < k < v):
            raise InvalidParamsError(f"need 0 < k < v, got k={k}, v={v}")
        if k == v - 1:
            raise InvalidParamsError("k = v - 1 (complete graph) is degenerate")
        if not (0 <= lam < k):
            raise InvalidParamsError(f"need 0 <= lam < k, got lam={lam}, k={k}")
        if mu == 0:
            raise InvalidParamsError("mu = 0 (disconnected case) is degenerate")
        if not (0 < mu <= k):
            raise InvalidParamsError(f"need 0 < mu <= k, got mu={mu}, k={k}")

    @property
    def edge_count(self) -> Fraction:
        """v*k/2 as an exact fraction (vk may be odd for raw tuples)."""
        return Fraction(self.v * self.k, 2)

    @property
    def primitive(self) -> bool:
        """True unless the tuple belongs to the complete-multipartite family."""
        return self.mu < self.k

    def identity_holds(self) -> bool:
        """Counting identity k(k - lam - 1) = (v - k - 1) mu."""
        return self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu


@dataclass(frozen=True)
class Spectrum:
    """Integer non-principal eigenvalues r >= 0 > s with multiplicities f, g."""

    r: int
    s: int
    f: int
    g: int


def derive_spectrum(params: SrgParams) -> Spectrum | None:
    """Integer eigenvalues of x^2 - (lam - mu)x - (k - mu) and multiplicities.

    Returns None when no integer spectrum exists, i.e. when the discriminant
    (lam - mu)^2 + 4(k - mu) is not a perfect square (the conference-type
    case, eigenvalues irrational) or when the multiplicity equations have no
    non-negative integer solution.
    """
    v, k, lam, mu = params.v, params.k, params.lam, params.mu
    c = lam - mu
    disc = c * c + 4 * (k - mu)
    e = math.isqrt(disc)
    if e * e != disc or e == 0:
        return None
    if (c + e) % 2 != 0:
        return None
    r = (c + e) // 2
    s = (c - e) // 2
    # 1 + f + g = v and k + f*r + g*s = 0
    num_f = -(k + s * (v - 1))
    if num_f % (r - s) != 0:
        return None
    f = num_f // (r - s)
    g = v - 1 - f
    if f < 0 or g < 0:
        return None
    return Spectrum(r=r, s=s, f=f, g=g)


def _is_conference(params: SrgParams) -> bool:
    """Irrational-eigenvalue tuples with integral multiplicities f = g = (v-1)/2.

    This forces 2k = v - 1, mu = (v-1)/4 and lam = mu - 1.
    """
    v, k, lam, mu = params.v, params.k, params.lam, params.mu
    return (
        2 * k == v - 1
        and (v - 1) % 4 == 0
        and mu == (v - 1) // 4
        and lam == mu - 1
    )


@dataclass(frozen=True)
class _QuadVal:
    """Exact element a + b*sqrt(disc) of a real quadratic field, disc nonsquare."""

    a: Fraction
    b: Fraction
    disc: int

    def _coerce(self, other):
        if isinstance(other, _QuadVal):
            if other.disc != self.disc:
                raise ValueError("mixed discriminants")
            return other
        return _QuadVal(Fraction(other), Fraction(0), self.disc)

    def __add__(self, other):
        o = self._coerce(other)
        return _QuadVal(self.a + o.a, self.b + o.b, self.disc)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return _QuadVal(self.a - o.a, self.b - o.b, self.disc)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return _QuadVal(
            self.a * o.a + self.b * o.b * self.disc,
            self.a * o.b + self.b * o.a,
            self.disc,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _QuadVal):
            raise TypeError("only division by rationals is supported")
        q = Fraction(other)
        return _QuadVal(self.a / q, self.b / q, self.disc)

    def sign(self) -> int:
        """Sign of a + b*sqrt(disc); exact, no floating point."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a^2 with b^2 * disc
        lhs, rhs = a * a, b * b * self.disc
        if lhs == rhs:
            return 0
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1


def krein_parameters(params: SrgParams, spectrum: Spectrum) -> tuple[Fraction, Fraction]:
    """The two non-trivial Krein parameters (q^1_11, q^2_22) as exact rationals.

    Computed from the entrywise square of the eigenspace projectors
    E_i = (mult/v) (I + p_i A + q_i (J - I - A)) expanded back in the
    idempotent basis.
    """
    v, k = params.v, params.k
    r, s, f, g = spectrum.r, spectrum.s, spectrum.f, spectrum.g
    c = v - 1 - k
    p1, q1 = Fraction(r, k), Fraction(-(1 + r), c)
    p2, q2 = Fraction(s, k), Fraction(-(1 + s), c)
    q111 = Fraction(f * f, v) * (1 + p1 * p1 * r - q1 * q1 * (1 + r))
    q222 = Fraction(g * g, v) * (1 + p2 * p2 * s - q2 * q2 * (1 + s))
    return q111, q222


def _conference_krein_ok(params: SrgParams) -> bool:
    """Krein conditions for irrational eigenvalues, evaluated in Q(sqrt(disc))."""
    v, k, lam, mu = params.v, params.k, params.lam, params.mu
    c = lam - mu
    disc = c * c + 4 * (k - mu)
    half = Fraction(1, 2)
    for sign in (1, -1):
        # eigenvalue (c + sign*sqrt(disc)) / 2
        ev = _QuadVal(half * c, half * sign, disc)
        p = ev / k
        q = (-1 - ev) / (v - 1 - k)
        core = 1 + p * p * ev - q * q * (1 + ev)
        if core.sign() < 0:
            return False
    return True


def krein_q22_zero(spectrum: Spectrum, k: int) -> bool:
    """Whether the Krein parameter q^2_22 vanishes.

    Tested through the equivalent integer identity
    (s + 1)(k + s + 2rs) = (k + s)(r + 1)^2, which avoids dividing by v.
    """
    r, s = spectrum.r, spectrum.s
    return (s + 1) * (k + s + 2 * r * s) == (k + s) * (r + 1) ** 2


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the classical necessary conditions.

    Field semantics: each *_ok flag is "this check did not reject".  Checks
    that do not apply (Krein/absolute bound for imprimitive mu = k tuples,
    or for tuples whose multiplicities are already non-integral) report True
    and leave the rejection to the applicable flag.
    """

    identity_ok: bool
    spectrum: Spectrum | None
    integrality_ok: bool
    krein_ok: bool
    absolute_bound_ok: bool
    krein_q22_zero: bool

    @property
    def passed(self) -> bool:
        return (
            self.identity_ok
            and self.integrality_ok
            and self.krein_ok
            and self.absolute_bound_ok
        )


def classical_feasibility(params: SrgParams) -> FeasibilityReport:
    """Counting identity, spectrum integrality, Krein and absolute bounds.

    All arithmetic is exact.  Conference-type tuples (irrational eigenvalues
    with f = g = (v-1)/2) count as integral; their Krein conditions are
    evaluated in the quadratic field Q(sqrt(disc)).
    """
    v = params.v
    identity_ok = params.identity_holds()
    spectrum = derive_spectrum(params)

    if spectrum is not None:
        f, g = spectrum.f, spectrum.g
        integrality_ok = True
        if params.primitive:
            q111, q222 = krein_parameters(params, spectrum)
            krein_ok = q111 >= 0 and q222 >= 0
            absolute_ok = 2 * v <= f * (f + 3) and 2 * v <= g * (g + 3)
            q22_zero = q222 == 0
        else:
            krein_ok = True
            absolute_ok = True
            q22_zero = False
    elif _is_conference(params):
        integrality_ok = True
        f = (v - 1) // 2
        krein_ok = _conference_krein_ok(params)
        absolute_ok = 2 * v <= f * (f + 3)
        q22_zero = False
    else:
        # irrational eigenvalues with non-integral multiplicities
        integrality_ok = False
        krein_ok = True
        absolute_ok = True
        q22_zero = False

    return FeasibilityReport(
        identity_ok=identity_ok,
        spectrum=spectrum,
        integrality_ok=integrality_ok,
        krein_ok=krein_ok,
        absolute_bound_ok=absolute_ok,
        krein_q22_zero=q22_zero,
    )


def subconstituent_scan(v1: int, k1: int) -> list[tuple[int, int]]:
    """All (lam', mu') making (v1, k1, lam', mu') classically feasible.

    Enumerates 0 <= lam' < k1, 0 < mu' <= k1 in lexicographic order and keeps
    the tuples passing classical_feasibility (conference-type tuples included
    when the multiplicity conditions permit).
    """
    if not v1 > k1 > 0:
        raise InvalidParamsError(f"need v1 > k1 > 0, got v1={v1}, k1={k1}")
    found = []
    for lam in range(k1):
        for mu in range(1, k1 + 1):
            try:
                cand = SrgParams(v1, k1, lam, mu)
            except InvalidParamsError:
                continue
            if classical_feasibility(cand).passed:
                found.append((lam, mu))
    return found
