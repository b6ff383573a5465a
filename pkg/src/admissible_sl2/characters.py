"""Characters of admissible-level modules as exact theta-quotient q-series.

For an admissible weight j = n - k t at level l = -2 + p/q, with a = p q and
integer indices b± = q(±(n+1) - k t), the normalized character is the ratio

    chibar_j = [theta_{b+,a}(tau, z/q) - theta_{b-,a}(tau, z/q)]
             / [theta_{1,2}(tau, z) - theta_{-1,2}(tau, z)],

and chi_j = q^(l z^2 / 4) * chibar_j absorbs the modular anomaly: its lowest
exponent is Delta_j - z j/2 - c_{l,z}/24 with the anomalous central charge
c_{l,z} = c_l - 6 l z^2, while chibar's uses the plain c_l.

The one-variable form rewrites chi_j as a ratio of Theta series at rescaled
arguments; `theta_ratio_identity_check` verifies that identity coefficient by
coefficient, together with the exponent cancellation l + 2 - a/q^2 = 0 that
makes the rewriting exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientDepthError, ParamOutOfRangeError, ZOutOfRangeError
from .exact import rat
from .qseries import QSeries, ThetaSpec, qseries_div, theta_min_exponent, theta_qseries
from .weights import AdmissibleWeight, conformal_weight, virasoro_data

__all__ = [
    "CharacterSpec",
    "ThetaRatioReport",
    "character_qseries",
    "chi_lowest_exponent",
    "chibar_lowest_exponent",
    "support_index_minus",
    "support_index_plus",
    "theta_ratio_identity_check",
]


def support_index_plus(level, weight) -> int:
    """Theta index b+ of the weight j = n - k t: q(n+1) + k p."""
    return level.q * (weight.n + 1) + weight.k * level.p


def support_index_minus(level, weight) -> int:
    """Theta index b- of the weight j = n - k t: -q(n+1) + k p."""
    return -level.q * (weight.n + 1) + weight.k * level.p


@dataclass(frozen=True)
class CharacterSpec:
    """An admissible weight together with the rational flavour parameter z.

    Derived quantities: a = p q; the theta support indices b± = ±q(n+1) + k p
    (see support_index_plus/support_index_minus); z = v/u in lowest terms
    with 0 < z < 1.
    """

    weight: AdmissibleWeight
    z: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", rat(self.z))
        if not (0 < self.z < 1):
            raise ZOutOfRangeError(f"z must satisfy 0 < z < 1, got {self.z}")

    @property
    def level(self):
        return self.weight.level

    @property
    def a(self) -> int:
        return self.level.p * self.level.q

    @property
    def b_plus(self) -> int:
        return support_index_plus(self.level, self.weight)

    @property
    def b_minus(self) -> int:
        return support_index_minus(self.level, self.weight)

    @property
    def u(self) -> int:
        return self.z.denominator

    @property
    def v(self) -> int:
        return self.z.numerator


def chibar_lowest_exponent(spec: CharacterSpec) -> Fraction:
    """Predicted lowest exponent of chibar: Delta_j - z j/2 - c_l/24."""
    w = spec.weight
    vd = virasoro_data(w.level, spec.z)
    return conformal_weight(w.level, w.j) - spec.z * w.j / 2 - vd.c_ell / 24


def chi_lowest_exponent(spec: CharacterSpec) -> Fraction:
    """Predicted lowest exponent of chi: Delta_j - z j/2 - c_{l,z}/24."""
    w = spec.weight
    vd = virasoro_data(w.level, spec.z)
    return conformal_weight(w.level, w.j) - spec.z * w.j / 2 - vd.c_ell_z / 24


def _theta_difference(
    plus: ThetaSpec, minus: ThetaSpec, order: Fraction, rescale: Fraction = Fraction(1)
) -> QSeries:
    """theta[plus] - theta[minus], exponents multiplied by `rescale`, to `order`."""
    inner = order / rescale
    diff = theta_qseries(plus, inner) - theta_qseries(minus, inner)
    if rescale != 1:
        diff = diff.scale_exponents(rescale)
    return diff


def _divide_to_order(
    num_build, den_build, e_n: Fraction, e_d: Fraction, order: Fraction
) -> QSeries:
    """Divide series built by the two callables, guaranteeing the target order.

    e_n, e_d are the exact lowest exponents of numerator and denominator; the
    margins follow the division order rule, so one pass suffices.  The retry
    loop is defensive: it only fires if a predicted lowest term cancels.
    """
    for margin in (1, 2, 4, 8):
        o_num = order + e_d + margin
        o_den = order + 2 * e_d - e_n + margin
        quotient = qseries_div(num_build(o_num), den_build(o_den))
        if quotient.order >= order:
            return quotient.truncate(order)
    raise InsufficientDepthError(
        f"could not resolve quotient to order {order}; lowest terms cancelled beyond margins"
    )


def character_qseries(spec: CharacterSpec, order, kind: str = "chi") -> QSeries:
    """Exact q-expansion of chi (default) or chibar, to the given order."""
    if kind not in ("chi", "chibar"):
        raise ParamOutOfRangeError(f"kind must be 'chi' or 'chibar', got {kind!r}")
    order = rat(order)
    lvl = spec.level
    shift = lvl.ell * spec.z * spec.z / 4 if kind == "chi" else Fraction(0)
    target = order - shift

    zq = spec.z / lvl.q
    th_p = ThetaSpec(spec.b_plus, spec.a, zq)
    th_m = ThetaSpec(spec.b_minus, spec.a, zq)
    th_1 = ThetaSpec(1, 2, spec.z)
    th_m1 = ThetaSpec(-1, 2, spec.z)
    e_n = min(theta_min_exponent(th_p), theta_min_exponent(th_m))
    e_d = min(theta_min_exponent(th_1), theta_min_exponent(th_m1))

    ratio = _divide_to_order(
        lambda o: _theta_difference(th_p, th_m, o),
        lambda o: _theta_difference(th_1, th_m1, o),
        e_n,
        e_d,
        target,
    )
    return ratio.shift_exponents(shift) if shift else ratio


@dataclass(frozen=True)
class ThetaRatioReport:
    """Outcome of comparing chi against its one-variable Theta-ratio form."""

    spec: CharacterSpec
    order: Fraction
    agree: bool
    first_mismatch: Fraction | None
    prefactor_zero: bool
    lhs: QSeries
    rhs: QSeries


def theta_ratio_identity_check(spec: CharacterSpec, order) -> ThetaRatioReport:
    """Verify chi_j equals its Theta-quotient rewriting, term by term.

    The right-hand side is

        [Theta_{qub+ + av, aqu}(tau/qu) - Theta_{qub- + av, aqu}(tau/qu)]
      / [Theta_{u+2v, 2u}(tau/u) - Theta_{-u+2v, 2u}(tau/u)],

    with z = v/u; a Theta at argument tau/w contributes exponents divided
    by w.  Also checks the exponent identity l + 2 - a/q^2 = 0 that the
    rewriting relies on.
    """
    order = rat(order)
    lvl = spec.level
    lhs = character_qseries(spec, order, kind="chi")

    a, u, v, q = spec.a, spec.u, spec.v, lvl.q
    w_num = Fraction(1, q * u)
    w_den = Fraction(1, u)
    np_ = ThetaSpec(q * u * spec.b_plus + a * v, a * q * u)
    nm_ = ThetaSpec(q * u * spec.b_minus + a * v, a * q * u)
    dp_ = ThetaSpec(u + 2 * v, 2 * u)
    dm_ = ThetaSpec(-u + 2 * v, 2 * u)
    e_n = min(theta_min_exponent(np_), theta_min_exponent(nm_)) * w_num
    e_d = min(theta_min_exponent(dp_), theta_min_exponent(dm_)) * w_den

    rhs = _divide_to_order(
        lambda o: _theta_difference(np_, nm_, o, rescale=w_num),
        lambda o: _theta_difference(dp_, dm_, o, rescale=w_den),
        e_n,
        e_d,
        order,
    )

    prefactor_zero = lvl.ell + 2 - Fraction(a, q * q) == 0
    cap = min(order, lhs.order, rhs.order)
    diff = lhs - rhs
    mismatch = None
    for exp, coeff in diff.prefix(cap):
        if coeff != 0:
            mismatch = exp
            break
    agree = mismatch is None and prefactor_zero
    return ThetaRatioReport(spec, order, agree, mismatch, prefactor_zero, lhs, rhs)
