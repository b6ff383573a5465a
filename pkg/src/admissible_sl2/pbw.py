"""PBW normal ordering in U(g) for three fixed 3-dimensional Lie algebras.

Each algebra carries a fixed generator order (g0, g1, g2); a PBW monomial
(a, b, c) denotes g0^a g1^b g2^c.  The three instances are

  SL2:  (f, h, e)        [e,f] = h,      [h,e] = 2e,     [h,f] = -2f
  L0:   (T+, T0, T-)     [T+,T-] = T0,   [T0,T+] = -2T+, [T0,T-] = 2T-
  HEIS: (eb, hb, fb)     [eb,fb] = hb,   hb central

All three share the triangular pattern [g1,g0] ~ g0, [g2,g1] ~ g2,
[g2,g0] ~ g1, which keeps the rewriting recursion shallow: multiplying a
normal monomial by g2 on the right is a plain append, and the g0/g1 cases
reduce along strictly smaller exponents.  Products are memoized per algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import AlgebraMismatchError, NotMonomialError, ParamOutOfRangeError
from .exact import RatLike, rat, rat_str

Mono = tuple[int, int, int]
Terms = dict[Mono, Fraction]


@dataclass(frozen=True)
class LieAlgebra:
    """A 3-dimensional Lie algebra with a fixed PBW generator order."""

    name: str
    gens: tuple[str, str, str]
    # entries (i, j, coeff, k) encode [g_i, g_j] = coeff * g_k for i > j;
    # omitted pairs commute.
    brackets: tuple[tuple[int, int, Fraction, int], ...]

    def bracket(self, i: int, j: int) -> tuple[Fraction, int] | None:
        for bi, bj, coeff, k in self.brackets:
            if bi == i and bj == j:
                return coeff, k
        return None

    def gen_index(self, name: str) -> int:
        return self.gens.index(name)


SL2 = LieAlgebra(
    name="sl2",
    gens=("f", "h", "e"),
    brackets=(
        (1, 0, Fraction(-2), 0),  # [h, f] = -2f
        (2, 0, Fraction(1), 1),   # [e, f] = h
        (2, 1, Fraction(-2), 2),  # [e, h] = -2e
    ),
)

L0 = LieAlgebra(
    name="l0",
    gens=("T+", "T0", "T-"),
    brackets=(
        (1, 0, Fraction(-2), 0),  # [T0, T+] = -2 T+
        (2, 0, Fraction(-1), 1),  # [T-, T+] = -T0
        (2, 1, Fraction(-2), 2),  # [T-, T0] = -2 T-
    ),
)

HEIS = LieAlgebra(
    name="heis",
    gens=("eb", "hb", "fb"),
    brackets=(
        (2, 0, Fraction(-1), 1),  # [fb, eb] = -hb
    ),
)

ALGEBRAS = {alg.name: alg for alg in (SL2, L0, HEIS)}

_GEN_CACHE: dict[tuple[str, Mono, int], tuple[tuple[Mono, Fraction], ...]] = {}


def _add_term(dst: Terms, mono: Mono, coeff: Fraction) -> None:
    s = dst.get(mono, Fraction(0)) + coeff
    if s:
        dst[mono] = s
    else:
        dst.pop(mono, None)


def _mono_times_gen(alg: LieAlgebra, mono: Mono, g: int) -> tuple[tuple[Mono, Fraction], ...]:
    """Normal form of (g0^a g1^b g2^c) * g_g, memoized."""
    key = (alg.name, mono, g)
    hit = _GEN_CACHE.get(key)
    if hit is not None:
        return hit
    a, b, c = mono
    out: Terms = {}
    if g == 2:
        out[(a, b, c + 1)] = Fraction(1)
    elif g == 1:
        if c == 0:
            out[(a, b + 1, 0)] = Fraction(1)
        else:
            # strip one g2: m g1 = (m' g1) g2 + m' [g2, g1] with m' = (a,b,c-1)
            for (x, y, zdeg), co in _mono_times_gen(alg, (a, b, c - 1), 1):
                _add_term(out, (x, y, zdeg + 1), co)
            br = alg.bracket(2, 1)
            if br is not None:
                coeff, k = br
                for m2, co in _mono_times_gen(alg, (a, b, c - 1), k):
                    _add_term(out, m2, coeff * co)
    else:
        if c > 0:
            for (x, y, zdeg), co in _mono_times_gen(alg, (a, b, c - 1), 0):
                _add_term(out, (x, y, zdeg + 1), co)
            br = alg.bracket(2, 0)
            if br is not None:
                coeff, k = br
                for m2, co in _mono_times_gen(alg, (a, b, c - 1), k):
                    _add_term(out, m2, coeff * co)
        elif b > 0:
            # strip one g1: m g0 = (m' g0) g1 + m' [g1, g0] with m' = (a,b-1,0)
            for m2, co in _mono_times_gen(alg, (a, b - 1, 0), 0):
                for m3, co3 in _mono_times_gen(alg, m2, 1):
                    _add_term(out, m3, co * co3)
            br = alg.bracket(1, 0)
            if br is not None:
                coeff, k = br
                for m2, co in _mono_times_gen(alg, (a, b - 1, 0), k):
                    _add_term(out, m2, coeff * co)
        else:
            out[(a + 1, 0, 0)] = Fraction(1)
    frozen = tuple(sorted(out.items()))
    _GEN_CACHE[key] = frozen
    return frozen


def _terms_times_gen(alg: LieAlgebra, terms: Terms, g: int) -> Terms:
    out: Terms = {}
    for mono, coeff in terms.items():
        for m2, co in _mono_times_gen(alg, mono, g):
            _add_term(out, m2, coeff * co)
    return out


class PBWElement:
    """Element of U(g) in PBW normal form: a sparse map monomial -> coefficient."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LieAlgebra, terms: Mapping[Mono, RatLike] | None = None):
        self.algebra = algebra
        clean: Terms = {}
        if terms:
            for mono, c in terms.items():
                a, b, cdeg = mono
                if a < 0 or b < 0 or cdeg < 0:
                    raise ParamOutOfRangeError(f"negative exponent in {mono}")
                cf = rat(c)
                if cf:
                    clean[mono] = cf
        self.terms = clean

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> PBWElement:
        return cls(algebra)

    @classmethod
    def unit(cls, algebra: LieAlgebra) -> PBWElement:
        return cls(algebra, {(0, 0, 0): 1})

    @classmethod
    def generator(cls, algebra: LieAlgebra, gen: int | str) -> PBWElement:
        idx = algebra.gen_index(gen) if isinstance(gen, str) else gen
        mono = tuple(1 if i == idx else 0 for i in range(3))
        return cls(algebra, {mono: 1})  # type: ignore[dict-item]

    @classmethod
    def monomial(cls, algebra: LieAlgebra, mono: Mono, coeff: RatLike = 1) -> PBWElement:
        return cls(algebra, {mono: rat(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check_same(self, other: PBWElement) -> None:
        if self.algebra.name != other.algebra.name:
            raise AlgebraMismatchError(
                f"{self.algebra.name} vs {other.algebra.name}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.algebra.name == other.algebra.name and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.algebra.name, frozenset(self.terms.items())))

    def __neg__(self) -> PBWElement:
        return PBWElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: PBWElement) -> PBWElement:
        self._check_same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_term(out, m, c)
        res = PBWElement(self.algebra)
        res.terms = out
        return res

    def __sub__(self, other: PBWElement) -> PBWElement:
        return self + (-other)

    def scale(self, c: RatLike) -> PBWElement:
        cf = rat(c)
        if not cf:
            return PBWElement(self.algebra)
        return PBWElement(self.algebra, {m: cf * v for m, v in self.terms.items()})

    def __mul__(self, other: PBWElement | RatLike) -> PBWElement:
        if isinstance(other, PBWElement):
            return pbw_product(self, other)
        return self.scale(other)

    def __rmul__(self, other: RatLike) -> PBWElement:
        return self.scale(other)

    def __pow__(self, n: int) -> PBWElement:
        if n < 0:
            raise ParamOutOfRangeError("negative power")
        out = PBWElement.unit(self.algebra)
        for _ in range(n):
            out = pbw_product(out, self)
        return out

    def times_gen(self, gen: int | str) -> PBWElement:
        idx = self.algebra.gen_index(gen) if isinstance(gen, str) else gen
        res = PBWElement(self.algebra)
        res.terms = _terms_times_gen(self.algebra, self.terms, idx)
        return res

    def coefficient(self, mono: Mono) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def single_monomial(self) -> tuple[Mono, Fraction]:
        if len(self.terms) != 1:
            raise NotMonomialError(f"{len(self.terms)} terms, expected 1")
        return next(iter(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.algebra.gens
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, mono)
                if e
            ]
            body = "*".join(factors)
            if not body:
                parts.append(rat_str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{rat_str(c)}*{body}")
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def pbw_product(left: PBWElement, right: PBWElement) -> PBWElement:
    """Normal-ordered product, reusing shared monomial prefixes of `right`."""
    left._check_same(right)
    alg = left.algebra
    acc: Terms = {}
    a0 = b0 = c0 = 0
    cur0 = dict(left.terms)
    cur1 = cur0
    cur2 = cur0
    for (a, b, c), coeff in sorted(right.terms.items()):
        if a != a0:
            for _ in range(a - a0):
                cur0 = _terms_times_gen(alg, cur0, 0)
            a0, b0, c0 = a, 0, 0
            cur1 = cur0
            cur2 = cur0
        if b != b0:
            for _ in range(b - b0):
                cur1 = _terms_times_gen(alg, cur1, 1)
            b0, c0 = b, 0
            cur2 = cur1
        if c != c0:
            for _ in range(c - c0):
                cur2 = _terms_times_gen(alg, cur2, 2)
            c0 = c
        for m, co in cur2.items():
            _add_term(acc, m, co * coeff)
    res = PBWElement(alg)
    res.terms = acc
    return res


def sigma_antihom(elem: PBWElement) -> PBWElement:
    """The anti-automorphism sigma of U(g) with sigma(x) = -x on generators.

    On a PBW monomial: sigma(g0^a g1^b g2^c) = (-1)^(a+b+c) g2^c g1^b g0^a,
    re-normal-ordered.
    """
    alg = elem.algebra
    out = PBWElement(alg)
    for (a, b, c), coeff in sorted(elem.terms.items()):
        cur = PBWElement.unit(alg)
        for _ in range(c):
            cur = cur.times_gen(2)
        for _ in range(b):
            cur = cur.times_gen(1)
        for _ in range(a):
            cur = cur.times_gen(0)
        sign = -1 if (a + b + c) % 2 else 1
        out = out + cur.scale(sign * coeff)
    return out


FACTOR_ALGEBRA = {"H": SL2, "G": L0, "Hbar": HEIS}


@dataclass(frozen=True)
class OperatorFactor:
    """Quadratic factor H_a = f e - a h - a(a+1), G_a = T- T+ - a T0 + a(a+1),
    or Hbar_a = eb fb - a hb, keyed by its algebra."""

    kind: str  # "H" | "G" | "Hbar"
    alpha: Fraction

    def __post_init__(self) -> None:
        if self.kind not in FACTOR_ALGEBRA:
            raise ParamOutOfRangeError(f"unknown factor kind {self.kind!r}")
        object.__setattr__(self, "alpha", rat(self.alpha))

    @property
    def algebra(self) -> LieAlgebra:
        return FACTOR_ALGEBRA[self.kind]

    def element(self) -> PBWElement:
        alg = self.algebra
        a = self.alpha
        unit = PBWElement.unit(alg)
        if self.kind == "H":
            fe = PBWElement.generator(alg, "f") * PBWElement.generator(alg, "e")
            return fe - PBWElement.generator(alg, "h").scale(a) - unit.scale(a * (a + 1))
        if self.kind == "G":
            tmtp = PBWElement.generator(alg, "T-") * PBWElement.generator(alg, "T+")
            return tmtp - PBWElement.generator(alg, "T0").scale(a) + unit.scale(a * (a + 1))
        ebfb = PBWElement.generator(alg, "eb") * PBWElement.generator(alg, "fb")
        return ebfb - PBWElement.generator(alg, "hb").scale(a)


def factor_product(
    factors: Sequence[OperatorFactor],
    tail: PBWElement | None = None,
    algebra: LieAlgebra | None = None,
) -> PBWElement:
    """Left-to-right product of operator factors, then an optional tail."""
    alg = algebra
    if alg is None:
        if factors:
            alg = factors[0].algebra
        elif tail is not None:
            alg = tail.algebra
        else:
            raise AlgebraMismatchError("cannot infer the algebra of an empty product")
    out = PBWElement.unit(alg)
    for fac in factors:
        if fac.algebra.name != alg.name:
            raise AlgebraMismatchError(f"factor {fac.kind} lives in {fac.algebra.name}, not {alg.name}")
        out = out * fac.element()
    if tail is not None:
        out = out * tail
    return out


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: str
    passed: bool


@dataclass
class IdentityReport:
    m_max: int
    n_samples: int
    checks: list[IdentityCheck]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]


def default_identity_samples() -> list[tuple[Fraction, Fraction]]:
    """Seven (alpha, beta) pairs with 7 distinct values per slot.

    The identities are polynomial of degree <= 2 in each parameter, so 7
    distinct samples per parameter (checked on the full grid for the
    two-parameter identities) prove them as polynomial identities.
    """
    alphas = ["-3", "-3/2", "-2/3", "0", "1/2", "4/3", "5/2"]
    betas = ["1/2", "5/3", "-7/4", "2", "-1/3", "3", "-5/2"]
    return [(rat(a), rat(b)) for a, b in zip(alphas, betas)]


def verify_operator_identities(
    m_max: int = 5,
    samples: Sequence[tuple[RatLike, RatLike]] | None = None,
) -> IdentityReport:
    """Exact PBW verification of the quadratic-factor calculus.

    Checks, in U(sl2) with H and in U(L0) with G:
      commuting factors, the raising/lowering shift identities
      (raise^m) X_a = X_{a-m} (raise^m) and (lower^m) X_a = X_{a+m} (lower^m),
      the product identities lower^m raise^m = X_0 ... X_{m-1} and
      raise^m lower^m = X_{-1} ... X_{-m}, and in sl2 also
      h^m e^n = e^n (h+2n)^m and h^m f^n = f^n (h-2n)^m.
    """
    pairs = [(rat(a), rat(b)) for a, b in (samples or default_identity_samples())]
    alphas = sorted({a for a, _ in pairs})
    betas = sorted({b for _, b in pairs})
    checks: list[IdentityCheck] = []

    def record(name: str, params: str, lhs: PBWElement, rhs: PBWElement) -> None:
        checks.append(IdentityCheck(name, params, lhs == rhs))

    for kind, alg, raise_gen, lower_gen in (
        ("H", SL2, "e", "f"),
        ("G", L0, "T+", "T-"),
    ):
        fac = lambda a: OperatorFactor(kind, rat(a)).element()  # noqa: E731
        up = PBWElement.generator(alg, raise_gen)
        down = PBWElement.generator(alg, lower_gen)
        for a in alphas:
            for b in betas:
                record(
                    f"{kind}_commute",
                    f"alpha={rat_str(a)},beta={rat_str(b)}",
                    fac(a) * fac(b),
                    fac(b) * fac(a),
                )
        for m in range(1, m_max + 1):
            upm = up**m
            downm = down**m
            for a in alphas:
                record(
                    f"{kind}_raise_shift",
                    f"m={m},alpha={rat_str(a)}",
                    upm * fac(a),
                    fac(a - m) * upm,
                )
                record(
                    f"{kind}_lower_shift",
                    f"m={m},alpha={rat_str(a)}",
                    downm * fac(a),
                    fac(a + m) * downm,
                )
            record(
                f"{kind}_lower_raise_product",
                f"m={m}",
                downm * upm,
                factor_product([OperatorFactor(kind, rat(i)) for i in range(m)], algebra=alg),
            )
            record(
                f"{kind}_raise_lower_product",
                f"m={m}",
                upm * downm,
                factor_product([OperatorFactor(kind, rat(-i)) for i in range(1, m + 1)], algebra=alg),
            )

    h = PBWElement.generator(SL2, "h")
    e = PBWElement.generator(SL2, "e")
    f = PBWElement.generator(SL2, "f")
    unit = PBWElement.unit(SL2)
    for m in range(1, m_max + 1):
        for n in range(1, m_max + 1):
            record(
                "cartan_raise_shift",
                f"m={m},n={n}",
                (h**m) * (e**n),
                (e**n) * ((h + unit.scale(2 * n)) ** m),
            )
            record(
                "cartan_lower_shift",
                f"m={m},n={n}",
                (h**m) * (f**n),
                (f**n) * ((h - unit.scale(2 * n)) ** m),
            )

    return IdentityReport(m_max=m_max, n_samples=len(pairs), checks=checks)
