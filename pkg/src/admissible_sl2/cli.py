"""Command-line front end (``admsl2``).

Subcommands::

    weights       enumerate admissible weights with conformal weights
    zhu           vacuum Zhu algebra: dimension, relation, annihilation constant
    bimodule      bimodule dimensions for one weight, presentation vs. PBW oracle
    fusion        fusion rule for one ordered pair, along any of three routes
    fusion-table  full fusion table and ring axioms for one level
    mff-verify    exact operator-calculus identity sweep
    character     exact character q-expansion, optional numeric cross-check
    stransform    certified residuals of the S-transformation law
    verify        invariant suites (fusion / mff / characters) over a (p, q) box

Weights are addressed as ``--n N --k K`` (or ``--j a/b``, resolved through
the unique (n, k) box decomposition); the two-weight flags ``--j1/--j2``
accept either an ``n,k`` pair or a rational ``a/b``.  ``--tau`` takes
``re,im`` with rational or decimal parts.  Reports render as text (default)
or JSON from the same encoded document; exit status is 0 when every check
passes, 1 when a check fails (the report is still emitted), and 2 for
usage or parameter errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import mpmath as mp

from . import report, verify
from .characters import (
    CharacterSpec,
    character_qseries,
    chi_lowest_exponent,
    chibar_lowest_exponent,
)
from .errors import AdmissibleError
from .exact import poly_gcd, rat, rat_str
from .fusion import FusionRing, bimodule_presentation, fusion, zhu_algebra
from .mff import bimodule_from_mff, hw_annihilation_polynomial
from .numeric import character_eval_numeric, qseries_eval_numeric, s_transform_residual
from .pbw import verify_operator_identities
from .weights import (
    AdmissibleWeight,
    conformal_weight,
    enumerate_admissible,
    level_from_pq,
    weight_from_j,
)

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    """Bad command-line parameters (exit status 2)."""


# -- argument helpers --------------------------------------------------------


def _rational(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _weight_from_flags(level, args) -> AdmissibleWeight:
    if args.j is not None:
        if args.n is not None or args.k is not None:
            raise UsageError("give either --n/--k or --j, not both")
        w = weight_from_j(level, _rational(args.j, "--j"))
        if w is None:
            raise UsageError(
                f"--j {args.j} is not an admissible weight at p={level.p}, q={level.q}"
            )
        return w
    if args.n is None or args.k is None:
        raise UsageError("a weight needs --n and --k together, or --j")
    return AdmissibleWeight(level, args.n, args.k)


def _weight_from_pair(level, text: str, flag: str) -> AdmissibleWeight:
    if "," in text:
        parts = text.split(",")
        if len(parts) != 2:
            raise UsageError(f'{flag}: expected "n,k", got {text!r}')
        try:
            n, k = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise UsageError(f'{flag}: expected integers in "n,k", got {text!r}') from exc
        return AdmissibleWeight(level, n, k)
    w = weight_from_j(level, _rational(text, flag))
    if w is None:
        raise UsageError(
            f"{flag}: j={text} is not an admissible weight at p={level.p}, q={level.q}"
        )
    return w


def _tau(text: str) -> mp.mpc:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError('--tau expects "re,im"')
    try:
        re, im = Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--tau: {exc}") from exc
    if im <= 0:
        raise UsageError("--tau needs a positive imaginary part")
    with mp.workprec(256):
        return mp.mpc(
            mp.mpf(re.numerator) / re.denominator,
            mp.mpf(im.numerator) / im.denominator,
        )


def _tolerance(text: str) -> mp.mpf:
    try:
        tol = mp.mpf(text)
    except ValueError as exc:
        raise UsageError(f"--tol: {exc}") from exc
    if not tol > 0 or not mp.isfinite(tol):
        raise UsageError(f"--tol must be a positive finite number, got {text}")
    return tol


def _emit(args, subcommand: str, parameters: dict, results, checks: list[dict]) -> int:
    doc = report.document(subcommand, parameters, results, checks)
    text = report.dumps(doc) if args.format == "json" else report.render_text(doc)
    sys.stdout.write(text)
    return 0 if report.all_checks_pass(doc) else 1


# -- subcommands -------------------------------------------------------------


def cmd_weights(args) -> int:
    level = level_from_pq(args.p, args.q)
    weights = enumerate_admissible(level)
    c_ell = 3 * level.ell / (level.ell + 2)
    results = {
        "level": level,
        "c_ell": c_ell,
        "count": len(weights),
        "weights": [
            {"n": w.n, "k": w.k, "j": w.j, "delta": conformal_weight(level, w.j)}
            for w in weights
        ],
    }
    checks = [
        report.check(
            "weight_count",
            len(weights) == (level.p - 1) * level.q,
            f"(p-1)q = {(level.p - 1) * level.q}",
        ),
        report.check(
            "weights_distinct", len({w.j for w in weights}) == len(weights), ""
        ),
        report.check(
            "vacuum_conformal_weight_zero",
            conformal_weight(level, Fraction(0)) == 0,
            "",
        ),
    ]
    params = {"p": args.p, "q": args.q, "format": args.format}
    return _emit(args, "weights", params, results, checks)


def cmd_zhu(args) -> int:
    level = level_from_pq(args.p, args.q)
    algebra = zhu_algebra(level)
    relation = algebra.relation
    squarefree = poly_gcd(relation, relation.derivative()).degree == 0
    const, poly = hw_annihilation_polynomial(level)
    results = {
        "level": level,
        "dimension": algebra.dimension,
        "relation": relation,
        "annihilation_constant": const,
    }
    checks = [
        report.check(
            "dimension",
            algebra.dimension == (level.p - 1) * level.q,
            f"(p-1)q = {(level.p - 1) * level.q}",
        ),
        report.check("relation_squarefree", squarefree, ""),
        report.check(
            "annihilation_proportional",
            const != 0 and poly == relation.scale(const),
            f"constant {rat_str(const)}",
        ),
    ]
    params = {"p": args.p, "q": args.q, "format": args.format}
    return _emit(args, "zhu", params, results, checks)


def cmd_bimodule(args) -> int:
    level = level_from_pq(args.p, args.q)
    w = _weight_from_flags(level, args)
    pres = bimodule_presentation(level, w)
    oracle = bimodule_from_mff(level, w.n_primed, w.k_primed)
    expected = w.n_primed * (level.p - w.n_primed) * (level.q - w.k_primed + 1)
    results = {
        "level": level,
        "weight": w,
        "n_primed": w.n_primed,
        "k_primed": w.k_primed,
        "dimension": pres.dimension,
        "y_truncation": pres.y_truncation,
        "mff_dimensions_by_degree": oracle.dims,
        "mff_dimension": oracle.dimension,
    }
    checks = [
        report.check(
            "dimension_formula",
            pres.dimension == expected,
            f"n'(p-n')(q-k'+1) = {expected}",
        ),
        report.check(
            "mff_dimension_agrees",
            oracle.dimension == pres.dimension,
            f"PBW reduction gives {oracle.dimension}",
        ),
        report.check(
            "mff_tail_unit",
            oracle.tail_unit,
            f"degrees {oracle.tail_window[0]}..{oracle.tail_window[1]} wash out",
        ),
    ]
    params = {
        "p": args.p,
        "q": args.q,
        "n": args.n,
        "k": args.k,
        "j": args.j,
        "format": args.format,
    }
    return _emit(args, "bimodule", params, results, checks)


def cmd_fusion(args) -> int:
    level = level_from_pq(args.p, args.q)
    w1 = _weight_from_pair(level, args.j1, "--j1")
    w2 = _weight_from_pair(level, args.j2, "--j2")
    record = fusion(level, w1, w2, oracle=args.oracle)
    results = {
        "level": level,
        "j1": w1,
        "j2": w2,
        "oracle": record.oracle,
        "gate_passed": record.gate_passed,
        "outputs": {w.j: m for w, m in record.outputs},
        "outputs_detail": [
            {"n": w.n, "k": w.k, "j": w.j, "multiplicity": m}
            for w, m in record.outputs
        ],
        "oracles_agree": record.oracles_agree,
    }
    checks = []
    if args.oracle == "all":
        checks.append(
            report.check(
                "oracles_agree",
                record.oracles_agree is True,
                "closed form, bimodule evaluation, PBW reduction",
            )
        )
    params = {
        "p": args.p,
        "q": args.q,
        "j1": args.j1,
        "j2": args.j2,
        "oracle": args.oracle,
        "format": args.format,
    }
    return _emit(args, "fusion", params, results, checks)


def cmd_fusion_table(args) -> int:
    level = level_from_pq(args.p, args.q)
    ring = FusionRing.build(level)
    basis = ring.basis
    table = []
    for a, w1 in enumerate(basis):
        for b, w2 in enumerate(basis):
            outs = {
                basis[c].j: int(ring.tensor[a, b, c])
                for c in range(len(basis))
                if ring.tensor[a, b, c]
            }
            table.append({"j1": w1.j, "j2": w2.j, "outputs": outs})
    axioms = ring.axioms()
    checks = [
        report.check("unit", axioms["unit"], "vacuum weight is a two-sided identity"),
        report.check("commutativity", axioms["commutativity"], ""),
        report.check("associativity", axioms["associativity"], ""),
    ]
    if args.oracle == "all":
        agree = True
        for w1 in basis:
            oracle = bimodule_from_mff(level, w1.n_primed, w1.k_primed)
            for w2 in basis:
                rec = fusion(level, w1, w2, oracle="all", mff_oracle=oracle)
                agree = agree and rec.oracles_agree is True
        checks.append(
            report.check(
                "oracles_agree",
                agree,
                f"{len(basis) ** 2} ordered pairs along all three routes",
            )
        )
    results = {
        "level": level,
        "basis": basis,
        "table": table,
    }
    params = {"p": args.p, "q": args.q, "oracle": args.oracle, "format": args.format}
    return _emit(args, "fusion-table", params, results, checks)


def cmd_mff_verify(args) -> int:
    if not 1 <= args.mmax <= 8:
        raise UsageError(f"--mmax must lie in 1..8, got {args.mmax}")
    rep = verify_operator_identities(m_max=args.mmax)
    by_name: dict[str, dict[str, int]] = {}
    for c in rep.checks:
        row = by_name.setdefault(c.name, {"total": 0, "passed": 0})
        row["total"] += 1
        row["passed"] += 1 if c.passed else 0
    results = {
        "m_max": rep.m_max,
        "n_samples": rep.n_samples,
        "identities_total": len(rep.checks),
        "by_identity": by_name,
        "failures": [f"{c.name}[{c.params}]" for c in rep.failures()],
    }
    checks = [
        report.check(
            "operator_identities",
            rep.all_pass,
            f"{len(rep.checks)} exact identities at m_max={rep.m_max}",
        )
    ]
    params = {"mmax": args.mmax, "format": args.format}
    return _emit(args, "mff-verify", params, results, checks)


def cmd_character(args) -> int:
    level = level_from_pq(args.p, args.q)
    w = _weight_from_flags(level, args)
    z = _rational(args.z, "--z")
    spec = CharacterSpec(w, z)
    order = _rational(args.trunc, "--trunc")
    series = character_qseries(spec, order, kind=args.kind)
    predicted = (
        chi_lowest_exponent(spec) if args.kind == "chi" else chibar_lowest_exponent(spec)
    )
    results = {
        "level": level,
        "weight": w,
        "z": z,
        "kind": args.kind,
        "a": spec.a,
        "b_plus": spec.b_plus,
        "b_minus": spec.b_minus,
        "predicted_lowest_exponent": predicted,
        "series": series,
    }
    low = series.lowest()
    checks = [
        report.check(
            "lowest_term",
            low == (predicted, Fraction(1)),
            f"expected coefficient 1 at exponent {rat_str(predicted)}",
        ),
        report.check(
            "coefficients_nonnegative_integers",
            all(c.denominator == 1 and c >= 0 for c in series.terms.values()),
            f"{len(series.terms)} terms below order {rat_str(series.order)}",
        ),
    ]
    params = {
        "p": args.p,
        "q": args.q,
        "n": args.n,
        "k": args.k,
        "j": args.j,
        "z": args.z,
        "kind": args.kind,
        "trunc": args.trunc,
        "tau": args.tau,
        "tol": args.tol,
        "format": args.format,
    }
    if args.tau is not None:
        tau = _tau(args.tau)
        bound = _tolerance(args.tol)
        numeric = character_eval_numeric(spec, tau, tol=bound / 100, kind=args.kind)
        series_value = qseries_eval_numeric(series, tau)
        diff = abs(numeric.value - series_value.value)
        results["tau"] = tau
        results["numeric"] = numeric
        results["series_value"] = series_value
        results["difference"] = diff
        checks.append(
            report.check(
                "series_numeric_agreement",
                diff <= bound + numeric.err + series_value.err,
                f"|series - numeric| = {mp.nstr(diff, 6)} (tolerance {args.tol})",
            )
        )
    return _emit(args, "character", params, results, checks)


def cmd_stransform(args) -> int:
    level = level_from_pq(args.p, args.q)
    z = _rational(args.z, "--z")
    tau = _tau(args.tau)
    tol = _tolerance(args.tol)
    rep = s_transform_residual(level, z, tau, variant=args.variant, tol=tol)
    finals = [row[-1] for row in rep.residuals]
    final_errors = [row[-1] for row in rep.residual_errors]
    results = {
        "level": level,
        "z": z,
        "tau": rep.tau,
        "variant": rep.variant,
        "weights": rep.weights,
        "factor": rep.factor,
        "s_matrix": rep.s_matrix,
        "chibar": rep.chibar,
        "lhs": rep.lhs,
        "residual_partial_sums": rep.residuals,
        "residual_errors": rep.residual_errors,
        "final_residuals": finals,
        "theta_error_max": rep.theta_error_max,
        "as_printed_s_matrix": rep.as_printed_s_matrix,
        "as_printed_final_residuals": rep.as_printed_residuals,
        "alt_factor": rep.alt_factor,
        "alt_final_residuals": rep.alt_residuals,
    }
    checks = [
        report.check(
            "theta_error_bounds",
            rep.theta_error_max <= tol,
            f"max certified theta error {mp.nstr(rep.theta_error_max, 6)}",
        ),
        report.check(
            "transformation_law",
            all(f <= tol + e for f, e in zip(finals, final_errors)),
            f"max residual {mp.nstr(max(finals), 6)} at tolerance {args.tol}",
        ),
    ]
    params = {
        "p": args.p,
        "q": args.q,
        "z": args.z,
        "tau": args.tau,
        "variant": args.variant,
        "tol": args.tol,
        "format": args.format,
    }
    return _emit(args, "stransform", params, results, checks)


def cmd_verify(args) -> int:
    results, checks = verify.run_suites(args.suite, args.pmax, args.qmax)
    params = {
        "suite": args.suite,
        "pmax": args.pmax,
        "qmax": args.qmax,
        "format": args.format,
    }
    return _emit(args, "verify", params, results, checks)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="admsl2",
        description="Exact invariants of admissible-level sl2 vacuum vertex algebras.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, handler, help_text: str, pq: bool = True):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        if pq:
            sp.add_argument("--p", type=int, required=True, help="numerator of t = p/q")
            sp.add_argument("--q", type=int, required=True, help="denominator of t = p/q")
        sp.add_argument("--format", choices=("json", "text"), default="text")
        sp.set_defaults(handler=handler)
        return sp

    def add_weight_flags(sp):
        sp.add_argument("--n", type=int, default=None, help="box coordinate 0..p-2")
        sp.add_argument("--k", type=int, default=None, help="box coordinate 0..q-1")
        sp.add_argument("--j", default=None, help='weight as a rational "a/b"')

    add("weights", cmd_weights, "enumerate admissible weights with conformal weights")
    add("zhu", cmd_zhu, "vacuum Zhu algebra: dimension, relation, annihilation constant")

    sp = add("bimodule", cmd_bimodule, "bimodule dimensions: presentation vs. PBW oracle")
    add_weight_flags(sp)

    sp = add("fusion", cmd_fusion, "fusion rule for one ordered pair of weights")
    sp.add_argument("--j1", required=True, help='first weight, "n,k" or rational "a/b"')
    sp.add_argument("--j2", required=True, help='second weight, "n,k" or rational "a/b"')
    sp.add_argument(
        "--oracle", choices=("closed", "bimodule", "mff", "all"), default="closed"
    )

    sp = add("fusion-table", cmd_fusion_table, "full fusion table and ring axioms")
    sp.add_argument("--oracle", choices=("closed", "all"), default="closed")

    sp = add("mff-verify", cmd_mff_verify, "exact operator-calculus identity sweep", pq=False)
    sp.add_argument("--mmax", type=int, default=5, help="largest power in the identities")

    sp = add("character", cmd_character, "exact character q-expansion for one weight")
    add_weight_flags(sp)
    sp.add_argument("--z", required=True, help='flavour parameter, rational in (0,1)')
    sp.add_argument("--kind", choices=("chi", "chibar"), default="chi")
    sp.add_argument("--trunc", default="30", help="truncation order (rational)")
    sp.add_argument("--tau", default=None, help='numeric cross-check point "re,im"')
    sp.add_argument("--tol", default="1e-8", help="agreement tolerance for --tau")

    sp = add("stransform", cmd_stransform, "certified S-transformation residual report")
    sp.add_argument("--z", required=True, help='flavour parameter, rational in (0,1)')
    sp.add_argument("--tau", required=True, help='upper-half-plane point "re,im"')
    sp.add_argument("--variant", choices=("KW1", "KW2"), default="KW2")
    sp.add_argument("--tol", default="1e-10", help="certification tolerance")

    sp = add("verify", cmd_verify, "invariant suites over a (p, q) box", pq=False)
    sp.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    sp.add_argument("--pmax", type=int, default=6)
    sp.add_argument("--qmax", type=int, default=5)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AdmissibleError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
