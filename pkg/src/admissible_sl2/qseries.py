"""Exact q-series with rational exponents on a common integer lattice.

A :class:`QSeries` stores finitely many terms ``c * q^(m/D)`` together with a
rational truncation order: the series is exact for all exponents strictly
below the order, and silent about everything above it.  All arithmetic tracks
truncation orders pessimistically so a reported coefficient is never
contaminated by an unseen tail term.

The module also provides the theta-function expansions

    theta_{n,m}(tau, z) = sum over j in Z + n/2m of q^(m(j^2 + j z)),

with ``q = e^(2 pi i tau)``; at ``z = 0`` this is the one-variable series
``Theta_{n,m}``.  Division of series (needed for characters written as theta
ratios) eliminates leading terms on the common lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    EmptyDenominatorError,
    ParamOutOfRangeError,
    ZeroDivisorError,
)
from .exact import rat

__all__ = [
    "QSeries",
    "ThetaSpec",
    "qseries_div",
    "theta_min_exponent",
    "theta_qseries",
]


class QSeries:
    """Truncated series ``sum c_m q^(m/denom)`` exact below ``order``.

    ``terms`` maps integer numerators ``m`` to nonzero rational coefficients;
    the represented exponent is ``m / denom``.  ``order`` is the truncation
    order: constructing the series drops any term with exponent >= order, and
    the lattice denominator is reduced to the smallest one that carries all
    remaining exponents.
    """

    __slots__ = ("denom", "terms", "order")

    def __init__(self, denom: int, terms: dict[int, Fraction], order) -> None:
        if denom < 1:
            raise ParamOutOfRangeError(f"lattice denominator must be >= 1, got {denom}")
        order = rat(order)
        kept = {
            m: rat(c)
            for m, c in terms.items()
            if c != 0 and Fraction(m, denom) < order
        }
        if kept:
            g = denom
            for m in kept:
                g = math.gcd(g, m)
            if g > 1:
                kept = {m // g: c for m, c in kept.items()}
                denom //= g
        else:
            denom = 1
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "terms", kept)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("QSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order) -> "QSeries":
        return cls(1, {}, order)

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Fraction, Fraction]], order) -> "QSeries":
        """Build from (exponent, coefficient) pairs; exponents may repeat."""
        pairs = [(rat(e), rat(c)) for e, c in pairs]
        denom = 1
        for e, _ in pairs:
            denom = denom * e.denominator // math.gcd(denom, e.denominator)
        terms: dict[int, Fraction] = {}
        for e, c in pairs:
            m = e.numerator * (denom // e.denominator)
            terms[m] = terms.get(m, Fraction(0)) + c
        return cls(denom, terms, order)

    # -- inspection --------------------------------------------------------

    def exponent(self, m: int) -> Fraction:
        return Fraction(m, self.denom)

    def lowest(self) -> tuple[Fraction, Fraction] | None:
        """(exponent, coefficient) of the lowest stored term, or None."""
        if not self.terms:
            return None
        m = min(self.terms)
        return Fraction(m, self.denom), self.terms[m]

    def coefficient(self, exponent) -> Fraction:
        exponent = rat(exponent)
        if exponent >= self.order:
            raise ValueError(
                f"exponent {exponent} is not resolved below truncation order {self.order}"
            )
        if self.denom % exponent.denominator:
            return Fraction(0)
        m = exponent.numerator * (self.denom // exponent.denominator)
        return self.terms.get(m, Fraction(0))

    def prefix(self, order=None) -> list[tuple[Fraction, Fraction]]:
        """Sorted (exponent, coefficient) pairs with exponent < order."""
        cap = self.order if order is None else min(self.order, rat(order))
        return [
            (Fraction(m, self.denom), self.terms[m])
            for m in sorted(self.terms)
            if Fraction(m, self.denom) < cap
        ]

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic --------------------------------------------------------

    def _aligned(self, other: "QSeries") -> tuple[int, dict[int, Fraction], dict[int, Fraction]]:
        denom = self.denom * other.denom // math.gcd(self.denom, other.denom)
        sa, sb = denom // self.denom, denom // other.denom
        return (
            denom,
            {m * sa: c for m, c in self.terms.items()},
            {m * sb: c for m, c in other.terms.items()},
        )

    def __add__(self, other: "QSeries") -> "QSeries":
        denom, a, b = self._aligned(other)
        for m, c in b.items():
            a[m] = a.get(m, Fraction(0)) + c
        return QSeries(denom, a, min(self.order, other.order))

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return QSeries(self.denom, {m: -c for m, c in self.terms.items()}, self.order)

    def scale(self, factor) -> "QSeries":
        factor = rat(factor)
        return QSeries(
            self.denom, {m: factor * c for m, c in self.terms.items()}, self.order
        )

    def __mul__(self, other: "QSeries") -> "QSeries":
        low_a = self.lowest()
        low_b = other.lowest()
        ea = low_a[0] if low_a else self.order
        eb = low_b[0] if low_b else other.order
        order = min(self.order + eb, other.order + ea)
        denom, a, b = self._aligned(other)
        out: dict[int, Fraction] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma + mb
                if Fraction(m, denom) < order:
                    out[m] = out.get(m, Fraction(0)) + ca * cb
        return QSeries(denom, out, order)

    def shift_exponents(self, delta) -> "QSeries":
        """Multiply by q^delta: exponents and order all shift by delta."""
        delta = rat(delta)
        denom = self.denom * delta.denominator // math.gcd(self.denom, delta.denominator)
        s = denom // self.denom
        d = delta.numerator * (denom // delta.denominator)
        return QSeries(
            denom, {m * s + d: c for m, c in self.terms.items()}, self.order + delta
        )

    def scale_exponents(self, factor) -> "QSeries":
        """Substitute q -> q^factor (factor > 0): exponents and order scale."""
        factor = rat(factor)
        if factor <= 0:
            raise ParamOutOfRangeError(f"exponent scale factor must be positive, got {factor}")
        pairs = [(Fraction(m, self.denom) * factor, c) for m, c in self.terms.items()]
        return QSeries.from_terms(pairs, self.order * factor)

    def truncate(self, order) -> "QSeries":
        order = rat(order)
        return QSeries(self.denom, dict(self.terms), min(self.order, order))

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.denom == other.denom
            and self.terms == other.terms
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.denom, tuple(sorted(self.terms.items())), self.order))

    def __repr__(self) -> str:
        if not self.terms:
            return f"QSeries(0 + O(q^{self.order}))"
        bits = []
        for m in sorted(self.terms):
            e = Fraction(m, self.denom)
            bits.append(f"{self.terms[m]}*q^({e})")
        return f"QSeries({' + '.join(bits)} + O(q^{self.order}))"


@dataclass(frozen=True)
class ThetaSpec:
    """Indexes theta_{n,m}(tau, z) with lattice Z + n/2m; z = 0 gives Theta.

    ``z`` is normalized to a Fraction when possible; a non-rational (complex)
    ``z`` is stored as given and is accepted only by the numeric evaluator,
    not by the exact series expansion.
    """

    n: int
    m: int
    z: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ParamOutOfRangeError(f"theta index m must be a positive integer, got {self.m}")
        try:
            object.__setattr__(self, "z", rat(self.z))
        except (TypeError, ValueError):
            pass

    @property
    def has_rational_z(self) -> bool:
        return isinstance(self.z, Fraction)

    @property
    def offset(self) -> Fraction:
        return Fraction(self.n, 2 * self.m)

    def exponent_at(self, j: Fraction) -> Fraction:
        return self.m * (j * j + j * self.z)


def theta_qseries(spec: ThetaSpec, order) -> QSeries:
    """Expand theta_{n,m}(tau, z) as an exact QSeries to the given order.

    Sums q^(m(j^2 + j z)) over all lattice points j in Z + n/2m whose exponent
    lies below the order; the exponent is an upward parabola in j, so the set
    is finite and is enumerated outward from the vertex j = -z/2.
    """
    if not spec.has_rational_z:
        raise ParamOutOfRangeError("exact theta expansion requires a rational z")
    order = rat(order)
    off = spec.offset
    vertex = -spec.z / 2 - off  # real minimiser in the integer coordinate i
    pairs: list[tuple[Fraction, Fraction]] = []
    i = math.ceil(vertex)
    while True:
        e = spec.exponent_at(i + off)
        if e >= order:
            break
        pairs.append((e, Fraction(1)))
        i += 1
    i = math.ceil(vertex) - 1
    while True:
        e = spec.exponent_at(i + off)
        if e >= order:
            break
        pairs.append((e, Fraction(1)))
        i -= 1
    return QSeries.from_terms(pairs, order)


def theta_min_exponent(spec: ThetaSpec) -> Fraction:
    """Exact lowest exponent of theta_{n,m}(tau, z) over its lattice."""
    if not spec.has_rational_z:
        raise ParamOutOfRangeError("exact theta expansion requires a rational z")
    off = spec.offset
    vertex = -spec.z / 2 - off
    lo = math.floor(vertex)
    return min(spec.exponent_at(i + off) for i in (lo, lo + 1))


def qseries_div(num: QSeries, den: QSeries) -> QSeries:
    """Divide truncated series by leading-term elimination.

    With numerator order O_n, denominator order O_d and lowest exponents e_n,
    e_d, the quotient is exact below ``min(O_n, O_d + e_n - e_d) - e_d``: the
    first unseen numerator term enters at O_n - e_d, and the first unseen
    denominator term corrupts the quotient at (O_d - e_d) + (e_n - e_d).
    """
    low_d = den.lowest()
    if low_d is None:
        raise EmptyDenominatorError(
            f"denominator has no terms below its truncation order {den.order}"
        )
    e_d, c_d = low_d
    if c_d == 0:
        raise ZeroDivisorError("denominator lowest coefficient is zero")
    low_n = num.lowest()
    e_n = low_n[0] if low_n else num.order
    order = min(num.order, den.order + e_n - e_d) - e_d
    if low_n is None:
        return QSeries.zero(order)

    denom, a, b = num._aligned(den)
    # Bring the order and e_d onto the lattice so all keys stay integral.
    denom2 = denom
    for f in (order, e_d):
        denom2 = denom2 * f.denominator // math.gcd(denom2, f.denominator)
    s = denom2 // denom
    rem = {m * s: c for m, c in a.items()}
    dterms = sorted((m * s, c) for m, c in b.items())
    m_d = dterms[0][0]
    cap = order + e_d  # remainder terms at/above this exponent cannot matter
    quo: dict[int, Fraction] = {}
    while rem:
        m_r = min(rem)
        if Fraction(m_r, denom2) >= cap:
            break
        c = rem[m_r] / c_d
        quo[m_r - m_d] = c
        for m_i, c_i in dterms:
            m = m_r - m_d + m_i
            if Fraction(m, denom2) >= cap:
                break
            v = rem.get(m, Fraction(0)) - c * c_i
            if v:
                rem[m] = v
            elif m in rem:
                del rem[m]
    return QSeries(denom2, quo, order)
