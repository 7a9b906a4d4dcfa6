"""Command-line front end.

Monomial ideals come from a JSON document ``{"vars": [...], "gens": [...]}``
(``--ideal FILE``) or inline with ``--vars x,y --gens "x^2,y^3"``. Output is
plain text by default and a JSON report with ``--format json``. Exit status
is 0 on success, 1 on domain errors and 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import howald, johnson
from .core import MonomialIdeal, ParseError, format_monomial, format_rational, parse_monomial, parse_rational
from .polyhedra import newton_polyhedron

__all__ = ["load_ideal", "main", "run"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def load_ideal(path: str | Path) -> MonomialIdeal:
    """Read an ideal document; malformed content raises :class:`ParseError`."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read ideal file {path}: {exc}") from exc
    if not isinstance(doc, dict) or "vars" not in doc or "gens" not in doc:
        raise ParseError(f"ideal file {path} needs 'vars' and 'gens' fields")
    return _build_ideal(doc["vars"], doc["gens"])


def _build_ideal(variables, gens) -> MonomialIdeal:
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise ParseError("'vars' must be a nonempty list of names")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise ParseError("'gens' must be a list of monomial strings")
    if len(set(variables)) != len(variables):
        raise ParseError(f"duplicate variable names in {variables}")
    return MonomialIdeal(tuple(variables), tuple(parse_monomial(g, variables) for g in gens))


def _split(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _ideal_from_args(args) -> MonomialIdeal:
    if args.ideal:
        return load_ideal(args.ideal)
    if args.vars is None or args.gens is None:
        raise UsageError("give --ideal FILE or both --vars and --gens")
    return _build_ideal(_split(args.vars), _split(args.gens))


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _interval_bounds(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"interval must look like LO..HI, got {text!r}")
    return _rational(lo), _rational(hi)


def _interval(args, default_hi) -> howald.Interval:
    lo, hi = args.interval if args.interval else (Fraction(0), Fraction(default_hi))
    return howald.Interval(lo, hi, lo_open=args.lo_open, hi_open=args.hi_open)


def _ideal_json(I: MonomialIdeal) -> list[str]:
    return I.monomial_strings()


def _facet_json(f) -> dict:
    return {"normal": list(f.normal), "offset": f.offset}


def _cmd_lct(args):
    I = _ideal_from_args(args)
    value = howald.lct(I)
    return format_rational(value), {"lct": format_rational(value)}


def _cmd_mult(args):
    I = _ideal_from_args(args)
    J = howald.multiplier_ideal(I, args.c)
    return ", ".join(J.monomial_strings()), {"ideal": _ideal_json(J)}


def _cmd_jump(args):
    I = _ideal_from_args(args)
    report = howald.jumping_numbers(I, _interval(args, I.dim))
    text = "\n".join(f"{format_rational(c)}: {', '.join(J.monomial_strings())}" for c, J in report)
    payload = {
        "interval": str(_interval(args, I.dim)),
        "jumping_numbers": [format_rational(c) for c in report.numbers],
        "ideals": [_ideal_json(J) for J in report.ideals],
    }
    return text, payload


def _cmd_threshold(args):
    I = _ideal_from_args(args)
    v = parse_monomial(args.monomial, I.variables)
    try:
        result = howald.threshold_of_monomial(I, v)
    except howald.InfiniteThresholdError:
        return "infinite", {"threshold": "infinite", "witnesses": []}
    lines = [format_rational(result.value)] + [f.format(I.variables) for f in result.witnesses]
    payload = {
        "threshold": format_rational(result.value),
        "witnesses": [_facet_json(f) for f in result.witnesses],
    }
    return "\n".join(lines), payload


def _cmd_newton(args):
    I = _ideal_from_args(args)
    if I.is_zero():
        raise ValueError("the zero ideal has no Newton polyhedron")
    P = newton_polyhedron(I.generators)
    text = "\n".join(f.format(I.variables) for f in P.facets)
    return text, {"facets": [_facet_json(f) for f in P.facets]}


def _shape(args) -> johnson.DeterminantalShape:
    return johnson.DeterminantalShape(args.m, args.n, args.r)


def _cmd_det_lct(args):
    value = johnson.det_lct(_shape(args))
    return format_rational(value), {"lct": format_rational(value)}


def _cmd_det_mult(args):
    shape = _shape(args)
    J = johnson.det_multiplier_ideal(shape, args.c)
    note = J.containment_note()
    text = str(J) + (f"\n# {note}" if note else "")
    payload = {
        "exponents": johnson.det_exponents(shape, args.c),
        "factors": [{"minor_size": i, "exponent": a} for i, a in J.factors],
        "note": note,
    }
    return text, payload


def _cmd_det_jump(args):
    shape = _shape(args)
    cands = johnson.det_jumping_candidates(shape, _interval(args, shape.m * shape.n))
    text = "\n".join(
        f"{format_rational(c)}: increments {', '.join(f'I_{i}' for i in idx)}" for c, idx in cands
    )
    payload = {
        "jumping_numbers": [format_rational(c) for c, _ in cands],
        "increments": [list(idx) for _, idx in cands],
    }
    return text, payload


def _cmd_det_expand(args):
    shape = johnson.DeterminantalShape(args.m, args.n, min(args.m, args.n))
    exp = johnson.symbolic_power_expansion(shape, args.i, args.a)
    return f"I_{args.i}^({args.a}) = {exp}", {"terms": [list(t) for t in exp.terms]}


def _cmd_det_minors(args):
    shape = _shape(args)
    gens = johnson.minor_generators(shape)
    text = "\n".join(g.format(shape) for g in gens)
    names = shape.variables()
    payload = {
        "count": len(gens),
        "minors": [
            {
                "rows": list(g.rows),
                "cols": list(g.cols),
                "terms": [{"sign": s, "monomial": format_monomial(v, names)} for s, v in g.terms],
            }
            for g in gens
        ],
    }
    return text, payload


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--timing", action="store_true", help="report elapsed time on stderr")

    ideal = _Parser(add_help=False)
    ideal.add_argument("--ideal", metavar="FILE", help="JSON document with 'vars' and 'gens'")
    ideal.add_argument("--vars", help="comma-separated variable names")
    ideal.add_argument("--gens", help="comma-separated monomials, e.g. 'x*y,z*w^2'")

    shape = _Parser(add_help=False)
    shape.add_argument("-m", type=int, required=True, help="rows")
    shape.add_argument("-n", type=int, required=True, help="columns")
    shape.add_argument("-r", type=int, required=True, help="minor size")

    interval = _Parser(add_help=False)
    interval.add_argument("--interval", type=_interval_bounds, metavar="LO..HI")
    g = interval.add_mutually_exclusive_group()
    g.add_argument("--lo-open", dest="lo_open", action="store_true", default=True)
    g.add_argument("--lo-closed", dest="lo_open", action="store_false")
    g = interval.add_mutually_exclusive_group()
    g.add_argument("--hi-open", dest="hi_open", action="store_true", default=False)
    g.add_argument("--hi-closed", dest="hi_open", action="store_false")

    exponent = _Parser(add_help=False)
    exponent.add_argument("-c", type=_rational, required=True, help="exponent, P/Q or integer")

    parser = _Parser(prog="multiplier-ideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    specs = [
        ("lct", [ideal], _cmd_lct, "log canonical threshold of a monomial ideal"),
        ("mult", [ideal, exponent], _cmd_mult, "multiplier ideal J(I^c)"),
        ("jump", [ideal, interval], _cmd_jump, "jumping numbers and their multiplier ideals"),
        ("threshold", [ideal], _cmd_threshold, "threshold of a monomial with witness facets"),
        ("newton", [ideal], _cmd_newton, "facets of the Newton polyhedron"),
        ("det-lct", [shape], _cmd_det_lct, "lct of a generic determinantal ideal"),
        ("det-mult", [shape, exponent], _cmd_det_mult, "determinantal multiplier ideal"),
        ("det-jump", [shape, interval], _cmd_det_jump, "determinantal jumping-number candidates"),
        ("det-expand", [], _cmd_det_expand, "symbolic power as a sum of minor products"),
        ("det-minors", [shape], _cmd_det_minors, "determinant expansions of the minors"),
    ]
    for name, parents, func, help_text in specs:
        p = sub.add_parser(name, parents=[common, *parents], help=help_text)
        p.set_defaults(func=func)
        if name == "threshold":
            p.add_argument("--monomial", required=True, help="monomial such as 'z^2*w'")
        if name == "det-expand":
            p.add_argument("-m", type=int, required=True)
            p.add_argument("-n", type=int, required=True)
            p.add_argument("-i", type=int, required=True, help="minor size")
            p.add_argument("-a", type=int, required=True, help="symbolic power")
    return parser


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one command; returns the exit status and the text to print.

    On failure the text is a one-line diagnostic meant for stderr.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        start = time.perf_counter()
        text, payload = args.func(args)
        elapsed = time.perf_counter() - start
    except (UsageError, ParseError) as exc:
        return 2, str(exc)
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""
    except ValueError as exc:
        return 1, f"error: {exc}"
    if args.timing:
        print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    if args.format == "json":
        inputs = {k: v for k, v in vars(args).items() if k not in ("func", "command", "format", "timing")}
        report = {"command": args.command, "inputs": inputs, **payload}
        return 0, json.dumps(report, indent=2, default=_json_default)
    return 0, text


def _json_default(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not serializable: {obj!r}")


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == 0 else sys.stderr
    if text:
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
