"""Admissible levels and weights for affine sl2.

A level is ell = -2 + p/q with p >= 2, q >= 1 and gcd(p, q) = 1; we write
t = p/q = ell + 2.  The admissible highest weights at that level are
j = n - k*t for 0 <= n <= p-2, 0 <= k <= q-1, so there are (p-1)*q of them.
The primed parametrization n' = n+1, k' = k+1 (so j = n'-1-(k'-1)t) is the
one the operator calculus uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    NotCoprimeError,
    ParamOutOfRangeError,
    POutOfRangeError,
    QOutOfRangeError,
    ZOutOfRangeError,
)
from .exact import RatLike, UniPoly, poly_from_linear_factors, rat, rat_str


@dataclass(frozen=True)
class Level:
    """Admissible level ell = -2 + p/q."""

    p: int
    q: int

    @property
    def t(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def ell(self) -> Fraction:
        return self.t - 2

    @property
    def n_weights(self) -> int:
        return (self.p - 1) * self.q

    def __repr__(self) -> str:
        return f"Level(p={self.p}, q={self.q}, ell={rat_str(self.ell)})"


@dataclass(frozen=True)
class AdmissibleWeight:
    """Admissible weight j = n - k*t in the (n, k) box of a level."""

    level: Level
    n: int
    k: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= self.level.p - 2:
            raise ParamOutOfRangeError(f"n={self.n} outside 0..{self.level.p - 2}")
        if not 0 <= self.k <= self.level.q - 1:
            raise ParamOutOfRangeError(f"k={self.k} outside 0..{self.level.q - 1}")

    @property
    def j(self) -> Fraction:
        return self.n - self.k * self.level.t

    @property
    def n_primed(self) -> int:
        return self.n + 1

    @property
    def k_primed(self) -> int:
        return self.k + 1

    @property
    def label(self) -> str:
        return f"{self.n},{self.k}"

    def __repr__(self) -> str:
        return f"AdmissibleWeight(n={self.n}, k={self.k}, j={rat_str(self.j)})"


def level_from_pq(p: int, q: int) -> Level:
    """Validate (p, q) and build the level ell = -2 + p/q."""
    if p < 2:
        raise POutOfRangeError(f"p={p} must be >= 2")
    if q < 1:
        raise QOutOfRangeError(f"q={q} must be >= 1")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"gcd({p}, {q}) != 1")
    return Level(p, q)


def enumerate_admissible(level: Level) -> list[AdmissibleWeight]:
    """All admissible weights, ordered by (n, k); there are (p-1)*q of them."""
    return [
        AdmissibleWeight(level, n, k)
        for n in range(level.p - 1)
        for k in range(level.q)
    ]


def weight_from_j(level: Level, j: RatLike) -> AdmissibleWeight | None:
    """Resolve a rational j to its (n, k) box coordinates, or None."""
    jf = rat(j)
    for k in range(level.q):
        n = jf + k * level.t
        if n.denominator == 1 and 0 <= n <= level.p - 2:
            return AdmissibleWeight(level, int(n), k)
    return None


def vacuum_polynomial(level: Level) -> UniPoly:
    """Monic polynomial whose roots are exactly the admissible weights.

    f(x) = prod_{r=0}^{p-2} prod_{s=0}^{q-1} (x - r + s*t); it is squarefree
    of degree (p-1)*q.
    """
    t = level.t
    return poly_from_linear_factors(
        r - s * t for r in range(level.p - 1) for s in range(level.q)
    )


def kac_kazhdan_witness(
    level: Level, j: RatLike
) -> tuple[str, int, int] | None:
    """Reducibility witness for the Verma module of highest weight j.

    Case I looks for positive integers (n, k) with j = n - 1 - (k-1)*t,
    case II for j = -n + k*t.  Integrality of n is periodic in k with period
    q, so k is searched in 1..q and then shifted by multiples of q (which
    raises n by p each time) until n >= 1.  Case I is tried first; None
    means the Verma module is irreducible.
    """
    jf = rat(j)
    t = level.t
    for case, n_of_k in (
        ("I", lambda k: jf + 1 + (k - 1) * t),
        ("II", lambda k: k * t - jf),
    ):
        for k in range(1, level.q + 1):
            n = n_of_k(k)
            if n.denominator != 1:
                continue
            shifts = 0
            if n < 1:
                # ceil((1 - n)/p) many q-shifts push n into the positives
                shifts = -((n - 1) // level.p)
            return case, int(n + shifts * level.p), k + shifts * level.q
    return None


@dataclass(frozen=True)
class VirasoroData:
    """Central charges and ground-state shift for the z-twisted grading."""

    c_ell: Fraction
    c_ell_z: Fraction
    lam: Fraction


def virasoro_data(level: Level, z: RatLike) -> VirasoroData:
    """c_ell = 3*ell/(ell+2), c_{ell,z} = c_ell - 6*ell*z^2, lam = ell*z^2/2."""
    zf = rat(z)
    if not 0 < zf < 1:
        raise ZOutOfRangeError(f"z={rat_str(zf)} outside (0, 1)")
    ell = level.ell
    c_ell = 3 * ell / (ell + 2)
    return VirasoroData(
        c_ell=c_ell,
        c_ell_z=c_ell - 6 * ell * zf**2,
        lam=ell * zf**2 / 2,
    )


def conformal_weight(level: Level, j: RatLike) -> Fraction:
    """Sugawara conformal weight Delta_j = j(j+2) / (4t)."""
    jf = rat(j)
    return jf * (jf + 2) / (4 * level.t)
