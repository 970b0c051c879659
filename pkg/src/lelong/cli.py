"""Command-line front end.

Exit codes: 0 ok, 1 validation failure, 2 usage error, 3 data or capacity
error.  ``-`` stands for standard input (and for standard output after -o).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from . import chainbound, coneopt, invariants
from .errors import CapacityError, LelongError, ParameterError, ParseError
from .exactnum import as_rat, format_rat
from .graph import ade_graph, as_divisor, parse_instance, serialize_instance, validate

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3
UNDEFINED = "—"


class UsageError(Exception):
    pass


class InvalidGraph(Exception):
    def __init__(self, violations):
        self.violations = violations


def approx(x: Fraction | None) -> str:
    """Exact value plus a labelled 6-significant-digit approximation (display only)."""
    if x is None:
        return UNDEFINED
    text = format_rat(x)
    return f"{text} (≈{float(x):#.6g})"


def _table(rows: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render_report(rep: invariants.InvariantReport, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(rep.to_json())
    rows = [
        ("slope", approx(rep.slope)),
        ("lelong", approx(rep.lelong)),
        ("multiplicity", approx(rep.multiplicity)),
        ("ratio", approx(rep.ratio)),
        ("in_cone", "yes" if rep.in_cone else "no"),
        ("slack", ", ".join(format_rat(x) for x in rep.slack)),
    ]
    return _table(rows)


def render_sharp(res: coneopt.SharpConstantResult, fmt: str = "text", rays=None, ids=None) -> str:
    if fmt == "json":
        return _dumps(res.to_json(rays=rays))
    rows = [
        ("c_sharp", approx(res.c_sharp)),
        ("extremal", ", ".join(format_rat(x) for x in res.extremal)),
        ("nu at extremal", approx(res.optimal_value_nu)),
        ("active", ", ".join(res.active_constraints) or UNDEFINED),
    ]
    if ids is not None:
        rows.append(("slope pinned at", ids[res.pinned_index]))
    text = _table(rows)
    text = f"c_sharp = {format_rat(res.c_sharp)}\n" + text
    if res.c_sharp == 1:
        text += "\nnote: equality case: ν = mult·s for every cone divisor"
    return text


# -- argument handling -------------------------------------------------------

def _read_graph(path: str):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return parse_instance(data)


def _valid_graph(path: str):
    g = _read_graph(path)
    violations = validate(g)
    if violations:
        raise InvalidGraph(violations)
    return g


def _divisor(g, text: str):
    try:
        vals = [as_rat(v) for v in text.split(",")]
    except ParseError:
        raise UsageError(f"cannot parse divisor {text!r}; expected comma-separated integers or p/q") from None
    if len(vals) != len(g):
        raise UsageError(f"divisor has {len(vals)} coefficients but {g.name} has {len(g)} vertices")
    if any(v < 0 for v in vals):
        raise UsageError("divisor coefficients must be nonnegative")
    return as_divisor(g, vals)


def _emit(text: str, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def cmd_validate(args, out):
    g = _read_graph(args.file)
    violations = validate(g)
    if args.format == "json":
        _emit(_dumps({"name": g.name, "valid": not violations,
                      "violations": [{"code": v.code, "message": v.message, "where": list(v.where)}
                                     for v in violations]}), out)
    elif violations:
        _emit(f"{g.name}: {len(violations)} violation(s)\n" + "\n".join(f"  {v}" for v in violations), out)
    else:
        _emit(f"{g.name}: valid", out)
    return EXIT_INVALID if violations else EXIT_OK


def cmd_invariants(args, out):
    g = _valid_graph(args.file)
    a = _divisor(g, args.divisor)
    _emit(render_report(invariants.report(g, a), args.format), out)
    return EXIT_OK


def cmd_sharp(args, out):
    g = _valid_graph(args.file)
    res = coneopt.sharp_constant(g)
    rays = None
    if len(g) <= coneopt.ray_capacity():
        rays = coneopt.enumerate_rays(g)
    _emit(render_sharp(res, args.format, rays=rays, ids=g.ids), out)
    return EXIT_OK


def cmd_ade(args, out):
    g = ade_graph(args.family, args.k)
    data = serialize_instance(g)
    if args.output and args.output != "-":
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        out.write(data.decode("utf-8"))
    return EXIT_OK


def cmd_chain_bound(args, out):
    g = _valid_graph(args.file)
    if (args.src is None) != (args.dst is None):
        raise UsageError("--from and --to must be given together")
    if args.src is not None:
        pb = chainbound.path_bound(g, args.src, args.dst)
        if args.format == "json":
            _emit(_dumps(pb.to_json()), out)
        else:
            _emit(_table([
                ("path", " - ".join(pb.path)),
                ("factors", ", ".join(format_rat(f) for f in pb.factors)),
                ("product", approx(pb.product)),
            ]) + f"\nnote: {chainbound.PATH_CHOICE_NOTE}", out)
        return EXIT_OK
    c = chainbound.global_chain_constant(g)
    if args.format == "json":
        _emit(_dumps({"name": g.name, "global_chain_constant": format_rat(c), "note": chainbound.PATH_CHOICE_NOTE}), out)
    else:
        _emit(f"global chain constant  {approx(c)}\nnote: {chainbound.PATH_CHOICE_NOTE}", out)
    return EXIT_OK


def cmd_rays(args, out):
    g = _valid_graph(args.file)
    rays = coneopt.enumerate_rays(g)
    if args.format == "json":
        _emit(_dumps({"name": g.name, "rays": [[format_rat(x) for x in r] for r in rays]}), out)
    else:
        lines = [f"{g.name}: {len(rays)} extreme ray(s) over ({', '.join(g.ids)})"]
        lines += ["  (" + ", ".join(format_rat(x) for x in r) + ")" for r in rays]
        _emit("\n".join(lines), out)
    return EXIT_OK


def cmd_sample(args, out):
    g = _valid_graph(args.file)
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    samples = coneopt.sample_cone(g, args.count, args.seed)
    best = None
    lines = []
    for j, a in enumerate(samples):
        rep = invariants.report(g, a)
        if rep.ratio is not None and (best is None or rep.ratio > best):
            best = rep.ratio
        coeffs = [format_rat(x) for x in a]
        if args.format == "json":
            lines.append(_dumps({"index": j, "divisor": coeffs, "report": rep.to_json()}))
        else:
            lines.append(f"[{j}] ({', '.join(coeffs)})  slope {format_rat(rep.slope)}  "
                         f"lelong {format_rat(rep.lelong)}  ratio {approx(rep.ratio)}")
    if args.format == "json":
        lines.append(_dumps({"summary": {"name": g.name, "count": len(samples), "seed": args.seed,
                                         "max_ratio": None if best is None else format_rat(best)}}))
    else:
        lines.append(f"max observed ratio {approx(best)} over {len(samples)} sample(s)")
    _emit("\n".join(lines), out)
    return EXIT_OK


def cmd_quotient(args, out):
    try:
        bound = invariants.quotient_bound(args.order, args.dim)
    except LelongError as exc:
        raise UsageError(str(exc)) from None
    doc = {"order": args.order, "dim": args.dim, "bound": bound}
    text = [f"|G|^(n-1) = {args.order}^{args.dim - 1} = {bound}"]
    if args.compare:
        g = _valid_graph(args.compare)
        res = coneopt.sharp_constant(g)
        mult = invariants.multiplicity(g)
        sharp = res.c_sharp * mult
        if bound == sharp:
            relation = "attained"
        elif bound > sharp:
            relation = "strictly exceeds"
        else:
            relation = "VIOLATED"
        doc.update({"graph": g.name, "c_sharp_times_mult": format_rat(sharp), "relation": relation})
        text.append(f"{g.name}: c_sharp·mult = {format_rat(sharp)}; quotient bound {relation}")
    _emit(_dumps(doc) if args.format == "json" else "\n".join(text), out)
    return EXIT_OK


def cmd_ord(args, out):
    g = _valid_graph(args.file)
    a = _divisor(g, args.divisor)
    if args.kmax < 1:
        raise UsageError("--kmax must be >= 1")
    seq = invariants.ord_sequence(g, a, args.kmax)
    s = invariants.slope(g, a)
    if args.format == "json":
        _emit(_dumps({"slope": format_rat(s), "ord": list(seq.orders),
                      "brackets": [[format_rat(lo), format_rat(hi)] for lo, hi in seq.brackets]}), out)
    else:
        lines = [f"slope {approx(s)}"]
        for k, (o, (lo, hi)) in enumerate(zip(seq.orders, seq.brackets), start=1):
            lines.append(f"k={k:<4d} ord={o:<6d} {format_rat(lo)} <= s <= {format_rat(hi)}")
        _emit("\n".join(lines), out)
    return EXIT_OK


def corpus_names() -> list[str]:
    root = resources.files("lelong") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def corpus_text(name: str) -> str:
    return (resources.files("lelong") / "corpus" / f"{name}.json").read_text("utf-8")


def cmd_corpus(args, out):
    if args.name is None:
        _emit("\n".join(corpus_names()), out)
        return EXIT_OK
    if args.name not in corpus_names():
        raise UsageError(f"no bundled instance named {args.name!r}")
    out.write(corpus_text(args.name))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lelong", description="Exact slope / Lelong-number invariants of resolution graphs.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[fmt], help="check an instance")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("invariants", parents=[fmt], help="slope, Lelong number, ratio for a divisor")
    s.add_argument("file")
    s.add_argument("--divisor", required=True)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("sharp", parents=[fmt], help="sharp comparison constant")
    s.add_argument("file")
    s.set_defaults(func=cmd_sharp)

    s = sub.add_parser("ade", help="emit an ADE dual graph instance")
    s.add_argument("family", choices=("A", "D", "E", "a", "d", "e"))
    s.add_argument("k", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_ade)

    s = sub.add_parser("chain-bound", parents=[fmt], help="chain estimate for one pair or globally")
    s.add_argument("file")
    s.add_argument("--from", dest="src")
    s.add_argument("--to", dest="dst")
    s.set_defaults(func=cmd_chain_bound)

    s = sub.add_parser("rays", parents=[fmt], help="extreme rays of the cone")
    s.add_argument("file")
    s.set_defaults(func=cmd_rays)

    s = sub.add_parser("sample", parents=[fmt], help="random cone divisors with their reports")
    s.add_argument("file")
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("quotient", parents=[fmt], help="quotient-singularity bound |G|^(n-1)")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--compare", metavar="FILE", help="compare with c_sharp*mult of a graph")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("ord", parents=[fmt], help="vanishing orders ord(I^k)")
    s.add_argument("file")
    s.add_argument("--divisor", required=True)
    s.add_argument("--kmax", type=int, required=True)
    s.set_defaults(func=cmd_ord)

    s = sub.add_parser("corpus", help="list or print bundled instances")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    out = sys.stdout
    try:
        return args.func(args, out)
    except (UsageError, ParameterError) as exc:
        print(f"lelong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidGraph as exc:
        print("lelong: invalid graph:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, CapacityError, LelongError, OSError) as exc:
        print(f"lelong: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
