"""
Command Line Front End
Subcommands over the algebra kernel, each producing a CommandReport
"""

import argparse
import logging
import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from .config import config
from .core.axes import (
    cn_central_fiber_torsion,
    cn_chow_vanishing,
    cn_is_flat,
    cn_is_kflat,
    cn_kflat_by_projections,
    cn_normalize,
    cn_smoothing,
    cn_smoothing_span_rank,
    cn_translation_difference,
)
from .core.chow import (
    CycleSpec,
    axes_cycle,
    axes_exceptional,
    chow_hull,
    chow_ideal_axes,
    chow_ideal_hypersurface_pair,
    find_weight_subset,
    sample_chow_ideal,
)
from .core.dsupp import MultMatrix, block_diagonal, char_poly, companion_matrix, dsupp, dsupp_torsion
from .core.dual_divisors import cartier_principal_test
from .core.errors import KFlatError, MalformedInputError
from .core.fields import FieldSpec, Scalar
from .core.ideal import Ideal
from .core.laurent import DualPoly
from .core.orders import MonomialOrder
from .core.plane_curves import PlaneClassification, PlaneCurveDeformation, plane_classify
from .core.poly import Poly, compositions
from .core.semigroup import (
    MonomialCurve,
    NumericalSemigroup,
    check_semigroup_lemma,
    monomial_cflat_nonglobal_dim,
)
from .utils.expression_parser import ParseContext, make_context, parse_poly, parse_poly_list
from .utils.reports import STATUS_NO, CommandReport, answer_report, error_report
from .utils.serialization import parse_cn_deformation, parse_plane_deformation, read_text

# Set up logging
logger = logging.getLogger(__name__)

DEFAULT_VARIABLES = "x,y,z"


class UsageError(KFlatError):
    """The command line could not be understood"""

    error_type = "usage"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _yes(flag: Optional[bool]) -> str:
    if flag is None:
        return "unknown"
    return "yes" if flag else "no"


def _scalar_list(text: str, field: FieldSpec) -> List[Scalar]:
    try:
        return [field.normalize(Fraction(item.strip())) for item in text.split(",") if item.strip()]
    except ValueError:
        raise MalformedInputError(f"expected comma-separated numbers, got '{text}'")


def _sorted(polys: Sequence[Poly]) -> List[Poly]:
    if not polys:
        return []
    order = polys[0].ring.order
    return sorted(polys, key=lambda p: order.key(p.leading_monomial()), reverse=True)


def _ideal_report(command: str, title: str, ideal: Ideal, extra: Optional[Dict] = None) -> CommandReport:
    basis = [str(g) for g in _sorted(ideal.groebner_basis())]
    report = CommandReport(command=command, lines=[f"{title}:"] + [f"  {g}" for g in basis])
    report.data = {"basis": basis, "order": str(ideal.ring.order)}
    report.data.update(extra or {})
    return report


# ---------------------------------------------------------------------------
# Context
# ---------------------------------------------------------------------------


def _field(args) -> FieldSpec:
    return FieldSpec.parse(args.field)


def _context(args, variables: Optional[str] = None) -> ParseContext:
    return make_context(
        variables or args.vars or DEFAULT_VARIABLES,
        _field(args),
        args.laurent,
        MonomialOrder.parse(args.order),
    )


def _ideal(text: str, ctx: ParseContext) -> Ideal:
    return Ideal(ctx.ring, parse_poly_list(text, ctx))


def _seed(args) -> int:
    return config.DEFAULT_SEED if args.seed is None else args.seed


def _text_input(args) -> str:
    if args.data is not None:
        return args.data
    if args.def_file is not None:
        return read_text(args.def_file)
    raise UsageError("give the deformation with --def FILE or --data TEXT")


# ---------------------------------------------------------------------------
# Ideal commands
# ---------------------------------------------------------------------------


def cmd_gb(args) -> CommandReport:
    ctx = _context(args)
    ideal = _ideal(args.ideal, ctx)
    return _ideal_report("gb", f"Groebner basis ({ctx.ring.order})", ideal)


def cmd_member(args) -> CommandReport:
    ctx = _context(args)
    ideal = _ideal(args.ideal, ctx)
    p = parse_poly(args.poly, ctx)
    inside = ideal.member(p)
    return answer_report("member", inside, [f"{p} in {ideal}: {_yes(inside)}"], {"member": inside})


def cmd_intersect(args) -> CommandReport:
    ctx = _context(args)
    result = _ideal(args.ideal, ctx).intersect(_ideal(args.other, ctx))
    return _ideal_report("intersect", "intersection", result)


def cmd_quotient(args) -> CommandReport:
    ctx = _context(args)
    ideal = _ideal(args.ideal, ctx)
    if args.by_ideal:
        result = ideal.quotient_ideal(_ideal(args.by_ideal, ctx))
    elif args.by:
        result = ideal.quotient(parse_poly(args.by, ctx))
    else:
        raise UsageError("quotient needs --by or --by-ideal")
    return _ideal_report("quotient", "quotient", result)


def cmd_saturate(args) -> CommandReport:
    ctx = _context(args)
    ideal = _ideal(args.ideal, ctx)
    result = ideal.saturate(parse_poly(args.by, ctx)) if args.by else ideal.saturate_maximal()
    return _ideal_report("saturate", "saturation", result)


def cmd_frob_power(args) -> CommandReport:
    ctx = _context(args)
    ideal = _ideal(args.ideal, ctx)
    power = ideal.elementwise_power(args.m, literal_field=args.literal_field, enumerate_field=args.enumerate)
    gens = [str(g) for g in _sorted(list(dict.fromkeys(power.gens)))]
    report = CommandReport(command="frob-power", lines=[f"element-wise power [{args.m}]:"] + [f"  {g}" for g in gens])
    report.data = {"generators": gens, "m": args.m, "field": str(ctx.ring.field)}
    return report


def cmd_pure(args) -> CommandReport:
    ctx = _context(args)
    ideal = _ideal(args.ideal, ctx)
    form = parse_poly(args.form, ctx) if args.form else None
    pure, flagged = ideal.pure_part_checked(form, _seed(args))
    report = _ideal_report("pure", "pure part", pure, {"flagged": flagged})
    if flagged:
        report.add("warning: embedded components away from the origin remain (best effort)")
    return report


def cmd_torsion(args) -> CommandReport:
    ctx = _context(args)
    ideal = _ideal(args.ideal, ctx)
    form = parse_poly(args.form, ctx) if args.form else None
    length = ideal.torsion_length(form)
    return CommandReport(command="torsion", lines=[f"torsion length: {length}"], data={"torsion_length": length})


# ---------------------------------------------------------------------------
# Divisorial support and Cartier test
# ---------------------------------------------------------------------------


def _matrix_rows(text: str, ctx: ParseContext) -> List[list]:
    return [parse_poly_list(row, ctx) for row in text.split(";") if row.strip()]


def cmd_dsupp(args) -> CommandReport:
    ctx = _context(args)
    if args.var in ctx.ring.variables:
        raise MalformedInputError(f"'{args.var}' is already a ring variable; pick another --var")
    if args.mods:
        mods = parse_poly_list(args.mods, ctx)
        product = dsupp_torsion(mods)
        blocks = block_diagonal([companion_matrix(g) for g in mods])
        via_matrix = char_poly(blocks, args.var)
        lines = [f"dsupp equation: {product}", f"companion char poly: {via_matrix}"]
        return CommandReport(command="dsupp", lines=lines, data={"equation": str(product), "char_poly": str(via_matrix)})
    if not args.matrix:
        raise UsageError("dsupp needs --mods or --matrix")
    rows = _matrix_rows(args.matrix, ctx)
    if args.eps_matrix:
        eps_rows = _matrix_rows(args.eps_matrix, ctx)
        if [len(r) for r in eps_rows] != [len(r) for r in rows]:
            raise MalformedInputError("--eps-matrix must have the shape of --matrix")
        rows = [[DualPoly(a, b) for a, b in zip(r, s)] for r, s in zip(rows, eps_rows)]
    result = dsupp(MultMatrix.of(rows), args.var)
    lines = [f"dsupp equation: {result.equation}", f"cartier: {_yes(result.is_cartier)}"]
    if result.polar_witness:
        lines.append(f"polar term: {result.polar_witness}")
    data = {"equation": str(result.equation), "is_cartier": result.is_cartier, "polar_witness": result.polar_witness}
    return CommandReport(command="dsupp", lines=lines, data=data)


def cmd_cartier(args) -> CommandReport:
    ctx = _context(args)
    f = parse_poly(args.f, ctx)
    g = parse_poly(args.g, ctx)
    result = cartier_principal_test(f, g, args.y, args.r)
    lines = [f"principal: {_yes(result.principal)}"] + [f"note: {d}" for d in result.diagnostics]
    data = {"principal": result.principal, "preconditions_hold": result.preconditions_hold}
    if not result.decided:
        lines.append("undecided: the non-zerodivisor preconditions fail")
        return CommandReport(command="cartier", status="undecided", exit_code=2, lines=lines, data=data)
    return answer_report("cartier", result.principal, lines, data)


# ---------------------------------------------------------------------------
# Chow equations
# ---------------------------------------------------------------------------


def cmd_chow_pair(args) -> CommandReport:
    ctx = _context(args)
    f = parse_poly(args.f, ctx)
    ideal = chow_ideal_hypersurface_pair(f, args.z, homogeneous=args.homogeneous)
    gens = [str(g) for g in ideal.gens]
    report = CommandReport(command="chow-pair", lines=["Chow equations:"] + [f"  {g}" for g in gens])
    report.data = {"generators": gens}
    return report


def cmd_chow_axes(args) -> CommandReport:
    ideal = chow_ideal_axes(args.n, _field(args))
    gens = [str(g) for g in _sorted(ideal.gens)]
    report = CommandReport(command="chow-axes", lines=[f"Chow equations of C_{args.n}:"] + [f"  {g}" for g in gens])
    report.data = {"generators": gens, "n": args.n}
    return report


def _cycle(args, ctx: ParseContext) -> CycleSpec:
    components = []
    for text in args.component or []:
        mult, _, gens = text.rpartition(":")
        try:
            m = int(mult) if mult.strip() else 1
        except ValueError:
            raise MalformedInputError(f"bad multiplicity in component '{text}'")
        components.append((_ideal(gens, ctx), m))
    if not components:
        raise UsageError("give at least one --component 'm: generators'")
    return CycleSpec(components)


def cmd_chow_hull(args) -> CommandReport:
    ctx = _context(args)
    cycle = _cycle(args, ctx)
    form = parse_poly(args.form, ctx) if args.form else None
    hull = chow_hull(cycle, form, literal_field=args.literal_field, enumerate_field=args.enumerate)
    return _ideal_report("chow-hull", "Chow hull", hull)


def cmd_chow_sample(args) -> CommandReport:
    if args.axes:
        cycle = axes_cycle(args.axes, _field(args))
        reference = chow_ideal_axes(args.axes, _field(args)) if args.compare else None
    else:
        ctx = _context(args)
        cycle = _cycle(args, ctx)
        reference = chow_hull(cycle) if args.compare else None
    sample = sample_chow_ideal(cycle, args.trials, _seed(args), args.batch, args.workers)
    extra = {
        "stabilized": sample.stabilized,
        "draws": sample.draws,
        "rejected": sample.rejected,
        "batches": sample.batches,
        "added_per_batch": sample.added_per_batch,
    }
    report = _ideal_report("chow-sample", "sampled Chow ideal", sample.ideal, extra)
    report.add(f"status: {sample.status} after {sample.draws} draws ({sample.rejected} rejected)")
    if reference is not None:
        agrees = sample.ideal.equals(reference)
        report.data["agrees"] = agrees
        report.add(f"agrees with the closed form: {_yes(agrees)}")
    return report


# ---------------------------------------------------------------------------
# Deformation checks
# ---------------------------------------------------------------------------


def _classification_report(command: str, result: PlaneClassification, extra_lines=(), extra=None) -> CommandReport:
    lines = [
        f"flat: {_yes(result.flat)}",
        f"globalizes: {result.globalizes_text}",
        f"C-flat: {_yes(result.cflat)}",
    ]
    lines += list(extra_lines) + [f"note: {d}" for d in result.diagnostics]
    data = {"flat": result.flat, "globalizes": result.globalizes_text, "cflat": result.cflat}
    data.update(extra or {})
    return answer_report(command, result.cflat, lines, data)


def cmd_check_plane(args) -> CommandReport:
    names = tuple(v.strip() for v in (args.vars or "u,v").split(","))
    if len(names) != 2:
        raise MalformedInputError("plane curves need exactly two variables")
    d = parse_plane_deformation(_text_input(args), _field(args), names)
    return _classification_report("check-plane", plane_classify(d))


def cmd_check_monomial(args) -> CommandReport:
    curve = MonomialCurve(args.a, args.c)
    ctx = make_context("t", _field(args), "t")
    phi = parse_poly(args.phi, ctx)
    psi = parse_poly(args.psi, ctx) if args.psi else None
    d = PlaneCurveDeformation.monomial(curve, phi, psi)
    dim = monomial_cflat_nonglobal_dim(args.a, args.c)
    lines = [f"C-flat non-globalizing directions: {dim}"]
    return _classification_report("check-monomial", plane_classify(d), lines, {"nonglobal_dim": dim})


def cmd_check_cn(args) -> CommandReport:
    # entries may also be separated by ";" on the command line
    text = _text_input(args).replace(";", "\n")
    d = cn_normalize(parse_cn_deformation(text, _field(args), args.n))
    kflat = cn_is_kflat(d)
    flat = cn_is_flat(d)
    lines = [f"K-flat: {_yes(kflat)}; flat: {_yes(flat)}"]
    data: Dict = {"n": d.n, "m": d.m, "kflat": kflat, "flat": flat}
    if d.n >= 3:
        vanishing = cn_chow_vanishing(d)
        lines.append(f"Chow equations lift: {_yes(vanishing)}")
        data["chow_vanishing"] = vanishing
    if args.cross_check:
        check = cn_kflat_by_projections(d, args.draws, _seed(args))
        data["projection_consistent"] = check.consistent
        if check.consistent:
            lines.append(f"projections: all {check.draws} draws regular")
        else:
            refutation = {k: [str(x) for x in v] for k, v in (check.refutation or {}).items()}
            data["refutation"] = refutation
            lines.append(f"projections: refuted at draw {check.draws} with {refutation}")
    if args.torsion:
        torsion = cn_central_fiber_torsion(d)
        data["central_fiber_torsion"] = torsion
        lines.append(f"central fiber torsion: {torsion}")
    return answer_report("check-cn", kflat, lines, data)


def cmd_cn_smooth(args) -> CommandReport:
    field = _field(args)
    p = _scalar_list(args.p, field)
    lam = _scalar_list(args.lam, field) if args.lam else [field.one()] * len(p)
    smoothing = cn_smoothing(p, lam, field)
    lines = ["equations:"] + [f"  {e}" for e in smoothing.equations]
    lines.append("first-order data:")
    lines += [f"  e_{i}{j} = {v}" for (i, j), v in sorted(smoothing.first_order.items())]
    lines.append(f"flat: {_yes(cn_is_flat(smoothing.deformation))}")
    data: Dict = {
        "equations": [str(e) for e in smoothing.equations],
        "first_order": {f"{i},{j}": str(v) for (i, j), v in sorted(smoothing.first_order.items())},
    }
    if args.moebius:
        if any(x == 0 for x in p):
            raise MalformedInputError("the inversion p -> 1/p needs nonzero p")
        inverted = cn_smoothing([field.inv(x) for x in p], [field.div(-l, x * x) for l, x in zip(lam, p)], field)
        shift = cn_translation_difference(inverted.first_order, smoothing.first_order)
        data["moebius_translation"] = None if shift is None else {str(i): str(a) for i, a in sorted(shift.items())}
        lines.append(f"inverted data differ by a translation: {_yes(shift is not None)}")
    if args.samples:
        rng = random.Random(_seed(args))
        n = len(p)
        samples = []
        while len(samples) < args.samples:
            pp = [field.normalize(rng.randint(-config.SAMPLE_BOUND, config.SAMPLE_BOUND)) for _ in range(n)]
            ll = [field.normalize(rng.randint(1, config.SAMPLE_BOUND)) for _ in range(n)]
            if len(set(pp)) == n and all(ll):
                samples.append((pp, ll))
        span = cn_smoothing_span_rank(samples, n, field)
        data["span"] = {"raw": span.raw, "modulo_translations": span.modulo_translations, "dimension": span.dimension}
        lines.append(f"span rank: {span.raw} of {span.dimension}, modulo translations {span.modulo_translations}")
    return CommandReport(command="cn-smooth", lines=lines, data=data)


def cmd_subset_lemma(args) -> CommandReport:
    if args.w:
        w = [int(x) for x in args.w.split(",")]
        subset = find_weight_subset(w)
        line = f"subset: {list(subset)}" if subset is not None else "subset: none"
        return answer_report("subset-lemma", subset is not None, [line], {"subset": list(subset) if subset else None})
    if not args.n:
        raise UsageError("subset-lemma needs --n or --w")
    mismatches = []
    total = 0
    for w in compositions(args.n, args.n):
        total += 1
        if (find_weight_subset(w) is None) != axes_exceptional(w):
            mismatches.append(list(w))
    lines = [f"checked {total} monomials of degree {args.n}: {len(mismatches)} mismatches"]
    lines += [f"  mismatch: {w}" for w in mismatches]
    return answer_report("subset-lemma", not mismatches, lines, {"checked": total, "mismatches": mismatches})


def cmd_semigroup(args) -> CommandReport:
    semigroup = NumericalSemigroup(args.a, args.c)
    lemma = check_semigroup_lemma(args.a, args.c, include_zero=args.include_zero)
    dim = monomial_cflat_nonglobal_dim(args.a, args.c)
    lines = [
        f"Frobenius number: {semigroup.frobenius()}",
        f"gaps: {semigroup.gaps()}",
        f"C-flat non-globalizing directions: {dim}",
        f"gap symmetry: {'passed' if lemma.passed else 'failed'} ({lemma.checked} cases)",
    ]
    data: Dict = {
        "frobenius": semigroup.frobenius(),
        "gaps": semigroup.gaps(),
        "nonglobal_dim": dim,
        "lemma_passed": lemma.passed,
        "counterexample": list(lemma.counterexample) if lemma.counterexample else None,
    }
    if lemma.counterexample:
        part, m = lemma.counterexample
        lines.append(f"counterexample: part ({part}) at m = {m}")
    if args.m is not None:
        inside = semigroup.member(args.m)
        data["member"] = inside
        lines.append(f"{args.m} in E: {_yes(inside)}")
    return answer_report("semigroup", lemma.passed, lines, data)


COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandReport]] = {
    "gb": cmd_gb,
    "member": cmd_member,
    "intersect": cmd_intersect,
    "quotient": cmd_quotient,
    "saturate": cmd_saturate,
    "frob-power": cmd_frob_power,
    "pure": cmd_pure,
    "torsion": cmd_torsion,
    "dsupp": cmd_dsupp,
    "cartier": cmd_cartier,
    "chow-pair": cmd_chow_pair,
    "chow-axes": cmd_chow_axes,
    "chow-hull": cmd_chow_hull,
    "chow-sample": cmd_chow_sample,
    "check-plane": cmd_check_plane,
    "check-monomial": cmd_check_monomial,
    "check-cn": cmd_check_cn,
    "cn-smooth": cmd_cn_smooth,
    "subset-lemma": cmd_subset_lemma,
    "semigroup": cmd_semigroup,
}


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _global_options(with_defaults: bool) -> argparse.ArgumentParser:
    """Shared flags; subcommands suppress defaults so flags work on either side"""
    parent = _ArgumentParser(add_help=False)

    def default(value):
        return value if with_defaults else argparse.SUPPRESS

    parent.add_argument("--field", default=default(config.DEFAULT_FIELD), help="Q or Fp:p")
    parent.add_argument("--vars", default=default(None), help="comma-separated variables, e.g. x,y,z")
    parent.add_argument("--laurent", default=default(None), help="variable allowed negative exponents")
    parent.add_argument("--order", default=default(config.DEFAULT_ORDER), help="lex, grevlex or elim:k")
    parent.add_argument("--seed", type=int, default=default(None), help="random seed")
    parent.add_argument("--json", action="store_true", default=default(False), help="print the report as JSON")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="kflat", parents=[_global_options(True)], description="Families of divisors and first-order deformations")
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    sub.required = True
    common = [_global_options(False)]

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=common, help=help_text)

    p = add("gb", "reduced Groebner basis")
    p.add_argument("--ideal", required=True)

    p = add("member", "ideal membership")
    p.add_argument("--poly", required=True)
    p.add_argument("--ideal", required=True)

    p = add("intersect", "intersection of two ideals")
    p.add_argument("--ideal", required=True)
    p.add_argument("--other", required=True)

    p = add("quotient", "ideal quotient I : f")
    p.add_argument("--ideal", required=True)
    p.add_argument("--by")
    p.add_argument("--by-ideal", dest="by_ideal")

    p = add("saturate", "saturation by f, or by the maximal ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--by")

    p = add("frob-power", "element-wise power I^[m]")
    p.add_argument("--ideal", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--literal-field", dest="literal_field", action="store_true")
    p.add_argument("--enumerate", action="store_true")

    p = add("pure", "pure part")
    p.add_argument("--ideal", required=True)
    p.add_argument("--form")

    p = add("torsion", "length of the torsion pure(I)/I")
    p.add_argument("--ideal", required=True)
    p.add_argument("--form")

    p = add("dsupp", "divisorial support by characteristic polynomials")
    p.add_argument("--mods", help="monic one-variable polynomials g_j")
    p.add_argument("--matrix", help="rows separated by ';', entries by ','")
    p.add_argument("--eps-matrix", dest="eps_matrix", help="eps parts, same shape as --matrix")
    p.add_argument("--var", default="v")

    p = add("cartier", "is f + eps y^-r g Cartier")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("chow-pair", "Chow equations of a hypersurface pair")
    p.add_argument("--f", required=True)
    p.add_argument("--z", default="z")
    p.add_argument("--homogeneous", action="store_true")

    p = add("chow-axes", "Chow equations of the coordinate axes")
    p.add_argument("--n", type=int, required=True)

    p = add("chow-hull", "Chow hull of a cycle")
    p.add_argument("--component", action="append", help="'m: generators', repeatable")
    p.add_argument("--form")
    p.add_argument("--literal-field", dest="literal_field", action="store_true")
    p.add_argument("--enumerate", action="store_true")

    p = add("chow-sample", "sample Chow equations of random projections")
    p.add_argument("--axes", type=int)
    p.add_argument("--component", action="append")
    p.add_argument("--trials", type=int, default=config.SAMPLE_TRIALS)
    p.add_argument("--batch", type=int, default=config.SAMPLE_BATCH)
    p.add_argument("--workers", type=int, default=config.SAMPLE_WORKERS)
    p.add_argument("--compare", action="store_true")

    for name, help_text in (("check-plane", "flat / globalizing / C-flat for a plane curve"), ("check-cn", "K-flatness of a C_n deformation")):
        p = add(name, help_text)
        p.add_argument("--def", dest="def_file")
        p.add_argument("--data")
        if name == "check-cn":
            p.add_argument("--n", type=int)
            p.add_argument("--cross-check", dest="cross_check", action="store_true")
            p.add_argument("--draws", type=int, default=config.KFLAT_DRAWS)
            p.add_argument("--torsion", action="store_true")

    p = add("check-monomial", "deformation z = phi(t) eps of x^a = y^c")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--psi")

    p = add("cn-smooth", "smoothings of C_n")
    p.add_argument("--p", required=True)
    p.add_argument("--lam")
    p.add_argument("--moebius", action="store_true")
    p.add_argument("--samples", type=int, default=0)

    p = add("subset-lemma", "weight subsets of degree-n monomials")
    p.add_argument("--n", type=int)
    p.add_argument("--w")

    p = add("semigroup", "numerical semigroup N a + N c")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--include-zero", dest="include_zero", action="store_true")

    return parser


def _guess_command(argv: Sequence[str]) -> str:
    for token in argv:
        if token in COMMANDS:
            return token
    return "kflat"


def run(argv: Sequence[str]) -> CommandReport:
    """Parse argv and run one subcommand; exit codes are 0 yes, 1 no, 2 errors"""
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as e:
        return error_report(_guess_command(argv), "usage", e.message)
    except SystemExit as e:
        return CommandReport(command="help", exit_code=int(e.code or 0))
    try:
        report = COMMANDS[args.command](args)
    except KFlatError as e:
        logger.debug(f"{args.command} failed: {e.error_type}: {e.message}")
        return error_report(args.command, e.error_type, e.message)
    if report.status == STATUS_NO:
        logger.info(f"{args.command}: answer is no")
    return report


def render(report: CommandReport, as_json: bool) -> str:
    return report.model_dump_json(indent=2) if as_json else report.text()
