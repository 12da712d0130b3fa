"""Command-line front end: ``edgecore <verb> [graph] [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import Mod, determinant, parse_field, rank
from .coreops import (
    colon_is_m,
    counterexample_report,
    detB_closed_form,
    exclusion_check,
    finite_intersection_core,
    psi_B_matrix,
    whiskered_core_report,
)
from .graph import (
    BUILTINS,
    GraphError,
    NotApplicable,
    builtin_graph,
    classify,
    in_cycle_normal_form,
    is_whiskered,
    load_graph,
    whiskered_normal_form,
)
from .ideal import colon_piece, edge_ideal, mu_power
from .reductions import (
    FAMILY_TAGS,
    Family,
    build_family,
    is_reduction,
    obstruction_check,
    parse_candidate,
    random_candidate,
    reduction_number,
)

VERBS = ("classify", "mu", "check-reduction", "reduction-number", "obstruction", "core", "colon",
         "detb", "intersect-core", "counterexample")

# statements each verdict instantiates, quoted in text output
CITE = {
    "classify": "analytic spread of an edge ideal (s-1 with a unique even cycle, s when basic)",
    "mu": "generator count of powers: binom(s+r-1, r), one fewer once r = d/2",
    "reduction": "reduction number d/2 - 1 for every minimal reduction",
    "obstruction": "product obstruction: prod a_odd = prod a_even forbids a reduction",
    "colon": "colon theorem: J : I = m for whiskered even cycles",
    "core": "whiskered core formula: core(I) = (J : I) I = mI",
    "exclusion": "exclusion theorem: core(I) is inside mI unless I is basic",
    "intersect": "finite-intersection core with the characteristic split on n = d/2",
    "detb": "det B = (prod b_odd - prod b_even)^2",
    "counterexample": "square with a pendant path: mI is not inside core(I)",
}


class UsageError(Exception):
    pass


def parse_candidate_file(path, s: int, field=None):
    field = parse_field("q") if field is None else field
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read candidate file {path}: {exc.strerror}") from None
    return parse_candidate(text, s, field)


def _scalar(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, Mod):
        return int(x)
    return x


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgecore", description="Minimal reductions and cores of edge ideals.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("graph", nargs="?", help="edge-list file: one 'u v' pair per line")
    p.add_argument("--builtin", choices=sorted(BUILTINS))
    p.add_argument("--field", default="q", help="q or fp:<prime> (default q)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--power", type=int, help="exponent r for mu")
    p.add_argument("--family", choices=FAMILY_TAGS)
    p.add_argument("--t", type=int, help="family index, or distinguished index for --random")
    p.add_argument("--coeff-file")
    p.add_argument("--random", action="store_true", help="random nonzero candidate (uses --seed, --t)")
    p.add_argument("--r", type=int, help="exponent checked by check-reduction (default d/2-1)")
    p.add_argument("--r-max", type=int)
    p.add_argument("--b", help="comma-separated b_1..b_s for detb")
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--experimental", action="store_true",
                   help="intersect-core: allow whiskered cycles, report dims without a verdict")
    p.add_argument("--samples", type=int, default=20)
    return p


def _graph(args):
    if args.builtin and args.graph:
        raise UsageError("give a graph file or --builtin, not both")
    if args.builtin:
        return builtin_graph(args.builtin)
    if not args.graph:
        raise UsageError(f"{args.verb} needs a graph file or --builtin")
    try:
        return load_graph(args.graph)
    except OSError as exc:
        raise UsageError(f"cannot read graph file {args.graph}: {exc.strerror}") from None


def _candidate(args, g, cls, field):
    chosen = sum(x is not None and x is not False for x in (args.family, args.coeff_file, args.random or None))
    if chosen != 1:
        raise UsageError("choose exactly one of --family, --coeff-file, --random")
    if args.coeff_file:
        return parse_candidate_file(args.coeff_file, g.s, field)
    if args.random:
        t = args.t if args.t is not None else (cls.cycle_edges[-1] if cls.cycle_edges else g.s)
        return random_candidate(g.s, t, args.seed, field)
    index = args.t
    if index is None:
        if args.family in ("basic", "jt", "h", "l"):
            raise UsageError(f"--family {args.family} needs --t")
        index = 0
    return build_family(Family(args.family, index), g, field, cls)


def run(args) -> tuple[dict, list[str]]:
    """Execute one command; returns (json payload, text lines)."""
    field = parse_field(args.field)
    verb = args.verb
    if verb == "counterexample":
        rep = counterexample_report(args.samples, args.seed)
        d = rep.to_dict()
        lines = [f"H = ({', '.join(d['h_generators'])})",
                 f"I^2 = H I: {rep.h_is_reduction}",
                 f"H : I = ({', '.join(rep.colon_basis)})  [dimension {len(rep.colon_basis)} of 6]",
                 f"element of mI outside H: {rep.witness}",
                 f"6x6 minors of B at {rep.samples} points: all zero when b5 = 0: "
                 f"{rep.minors_vanish_when_b5_zero}; some nonzero otherwise: {rep.minor_nonzero_generic}",
                 f"verdict: core(I) != mI  [{CITE['counterexample']}]"]
        return d, lines
    g = _graph(args)
    cls = classify(g)
    I = edge_ideal(g, field)
    if verb == "classify":
        d = cls.as_dict()
        return d, [f"{k}: {v}" for k, v in d.items()] + [f"[{CITE['classify']}]"]
    if verb == "mu":
        if args.power is None or args.power < 0:
            raise UsageError("mu needs --power r with r >= 0")
        if args.power == 0:
            val = 1
        else:
            val = mu_power(I, args.power)
        return {"power": args.power, "mu": val}, [f"mu(I^{args.power}) = {val}  [{CITE['mu']}]"]
    if verb in ("check-reduction", "reduction-number", "obstruction", "colon"):
        c = _candidate(args, g, cls, field)
        out = {"candidate": {"t": c.t, "coeffs": [_scalar(a) for a in c.coeffs], "provenance": c.provenance}}
        if verb == "obstruction":
            obs = obstruction_check(c, cls)
            out["obstructed"] = obs
            return out, [str(c), f"obstructed: {obs}" + (" (not a reduction)" if obs else ""),
                         f"[{CITE['obstruction']}]"]
        if verb == "check-reduction":
            r = args.r if args.r is not None else (cls.d // 2 - 1 if cls.d else 1)
            if r < 0:
                raise UsageError("--r must be nonnegative")
            ok = is_reduction(c, I, r)
            out.update(r=r, is_reduction=ok)
            return out, [str(c), f"I^{r + 1} = J I^{r}: {ok}", f"[{CITE['reduction']}]"]
        if verb == "reduction-number":
            rn = reduction_number(c, I, args.r_max, cls)
            out["reduction_number"] = rn
            if cls.d and cls.unicyclic:
                out["expected"] = cls.d // 2 - 1
            return out, [str(c), f"reduction number: {rn if rn is not None else 'none (not a reduction)'}",
                         f"[{CITE['reduction']}]"]
        piece = colon_piece(c.ideal(I), I, 1)
        basis = sorted((str(p) for p in piece.polys()), key=lambda v: (len(v), v))
        eq = colon_is_m(c, I)
        out.update(colon_degree1_basis=basis, colon_dim=piece.dim, n=I.n, colon_is_m=eq)
        return out, [str(c), f"(J : I) in degree 1: span{{{', '.join(basis)}}}  (dim {piece.dim} of {I.n})",
                     f"J : I = m: {eq}  [{CITE['colon']}]"]
    if verb == "core":
        if cls.is_basic:
            raise NotApplicable("edge ideal is basic: core(I) = I, nothing to compute")
        if is_whiskered(g, cls):
            rep = whiskered_core_report(g, field, args.max_deg)
            return rep.to_dict(), _table(rep) + [f"verdict: core(I) = mI  [{CITE['core']}]"]
        ex = exclusion_check(g, field)
        out = ex.to_dict()
        return out, [f"walk: {list(ex.walk)}"] + [
            f"e{r.edge}: missing from {r.witness}: {r.excluded}" for r in ex.rows
        ] + [f"core(I) inside mI: {ex.all_excluded}  [{CITE['exclusion']}]",
             "equality with mI is not claimed for this graph"]
    if verb == "intersect-core":
        rep = finite_intersection_core(g, field, args.max_deg, experimental=args.experimental)
        return rep.to_dict(), _table(rep) + [f"verdict: {rep.verdict}  [{CITE['intersect']}]"]
    if verb == "detb":
        if not args.b:
            raise UsageError("detb needs --b b1,...,bs")
        try:
            b = [field.parse(v) for v in args.b.split(",")]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"malformed --b {args.b!r}") from None
        if not is_whiskered(g, cls):
            raise NotApplicable("detb needs an even cycle with whiskers")
        if not in_cycle_normal_form(g, cls):
            g, cls = whiskered_normal_form(g)
        B = psi_B_matrix(g, b, field)
        out = {"B": [[_scalar(x) for x in row] for row in B.rows], "rank": rank(B), "s": g.s}
        lines = ["B ="] + ["  " + " ".join(f"{str(_scalar(x)):>5}" for x in row) for row in B.rows]
        if B.nrows == B.ncols:
            det, closed = determinant(B), detB_closed_form(b, field)
            out.update(det=_scalar(det), closed_form=_scalar(closed), agree=det == closed)
            lines.append(f"det B = {_scalar(det)}; closed form = {_scalar(closed)}  [{CITE['detb']}]")
        lines.append(f"rank B = {out['rank']} of {g.s}")
        return out, lines
    raise UsageError(f"unknown verb {verb}")  # pragma: no cover


def _table(rep) -> list[str]:
    lines = [f"method: {rep.method}; field {rep.field}; d = {rep.d}",
             f"families: {', '.join(rep.families)}",
             "deg  core_dim  mI_dim  equal"]
    lines += [f"{r.deg:>3}  {r.core_dim:>8}  {r.mI_dim:>6}  {r.equal}" for r in rep.degrees]
    lines += [f"note: {n}" for n in rep.notes]
    return lines


def emit_report(args, payload: dict, lines: list[str]) -> str:
    if args.output == "json":
        env = {"command": args.verb, "seed": args.seed, "field": args.field}
        env.update(payload)
        return json.dumps(env, indent=2, default=_scalar)
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, lines = run(args)
    except (UsageError, GraphError, NotApplicable, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(emit_report(args, payload, lines))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
