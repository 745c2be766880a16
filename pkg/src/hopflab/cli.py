"""``hopflab``: evaluate expressions, run verification suites, browse and
export models.  Exit status 0 when everything passes, 1 when a check
fails, 2 on usage or configuration errors."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

log = logging.getLogger("hopflab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

LIE_EXPORTS = {
    "su2_ds": "su2_ds",
    "double_su2": "double_su2_ds",
    "bicross_su2": "su2_pair",
    "double_su2_limit": "double_su2_limit",
    "bicross_su2_limit": "bicross_su2_limit",
}


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _common(p: argparse.ArgumentParser, model_required: bool = False):
    p.add_argument("--model", required=model_required, help="registry model id")
    p.add_argument("--mode", help="exact-q, exact-lambda, t-adic, lambda-adic or rep")
    p.add_argument("--order", type=int, default=4, help="truncation order of series modes")
    p.add_argument("--kappa", type=_fraction, default=Fraction(1, 2), help="q = exp(kappa t)")
    p.add_argument("--json", metavar="PATH", help="also write the result as JSON")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopflab", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="verb", required=True)

    for verb, help_ in (("eval", "normal form of an expression, optionally under a structure map"),
                        ("normalize", "normal form of an expression")):
        p = sub.add_parser(verb, help=help_)
        p.add_argument("expr")
        _common(p, model_required=True)
        if verb == "eval":
            p.add_argument("--apply", choices=["coproduct", "counit", "antipode",
                                               "antipode-inverse", "star"])

    p = sub.add_parser("verify", help="run a verification suite, or all of them")
    p.add_argument("suite", help="suite id or 'all'")
    _common(p)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for 'verify all'")
    p.add_argument("--quiet", action="store_true", help="summary lines only")

    p = sub.add_parser("list", help="list models, suites, modes, golden tables or charts")
    p.add_argument("what", nargs="?", default="models",
                   choices=["models", "suites", "modes", "golden", "charts", "lie"])

    p = sub.add_parser("export", help="write a model, Lie bialgebra or report as JSON")
    p.add_argument("kind", choices=["model", "lie", "report"])
    p.add_argument("name")
    p.add_argument("-o", "--output", help="file path (default: stdout)")
    p.add_argument("--mode")
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--kappa", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--max-degree", type=int, default=3)
    return ap


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")


def _model(args):
    from .models import get_model
    from .models.registry import normalize_mode

    mode = normalize_mode(args.mode)
    if mode == "rep":
        return get_model(args.model, None, args.order, args.kappa), "rep"
    return get_model(args.model, mode, args.order, args.kappa), mode


def cmd_eval(args) -> int:
    from .ncalg import NCElement
    from .parser import parse

    P, mode = _model(args)
    x = parse(args.expr, P)
    op = getattr(args, "apply", None)
    if op:
        if not isinstance(x, NCElement) or not hasattr(P, "coproduct"):
            raise UsageError(f"--apply {op} needs an element of a Hopf algebra")
        x = {"coproduct": P.coproduct, "counit": P.counit, "antipode": P.antipode,
             "antipode-inverse": P.antipode_inverse, "star": P.star}[op](x)
    if mode == "rep":
        from .models.rep import rho, rho_tensor

        x = rho(x) if isinstance(x, NCElement) else rho_tensor(x)
    text = str(x)
    print(text)
    if args.json:
        data = {"model": args.model, "mode": mode or getattr(P, "mode", ""), "expr": args.expr,
                "apply": op, "result": text}
        _write(json.dumps(data, sort_keys=True, indent=2) + "\n", args.json)
    return EXIT_OK


def _print_report(rep, quiet: bool):
    print(rep.summary())
    if quiet:
        return
    for c in rep.failures:
        print(f"  FAIL [{c.paper_label}] {c.name}")
        print(f"       residual: {c.residual}")


def cmd_verify(args) -> int:
    from .suites import SUITES, run_all, run_suite

    if args.suite == "all":
        if args.model or args.mode:
            raise UsageError("'verify all' runs every suite with its own models and modes")
        reports = run_all(args.order, args.max_degree, args.kappa, args.jobs)
    elif args.suite in SUITES:
        reports = [run_suite(args.suite, args.model, args.mode, args.order, args.max_degree,
                             args.kappa)]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; see 'hopflab list suites'")
    for r in reports:
        _print_report(r, args.quiet)
    failed = sum(len(r.failures) for r in reports)
    total = sum(len(r.checks) for r in reports)
    if len(reports) > 1:
        print(f"total: {total - failed}/{total} pass")
    if args.json:
        if len(reports) == 1:
            _write(reports[0].to_json(), args.json)
        else:
            body = {"reports": [r.to_dict() for r in reports]}
            _write(json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n", args.json)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_list(args) -> int:
    from .models import MODEL_MODES, MODES, CHARTS

    if args.what == "models":
        for m, modes in MODEL_MODES.items():
            print(f"{m}: {', '.join(modes)}")
    elif args.what == "suites":
        from .suites import SUITES

        for s in SUITES.values():
            print(f"{s.name}: {s.doc}")
    elif args.what == "modes":
        print("\n".join(MODES))
    elif args.what == "golden":
        from .golden import golden_dir, golden_labels

        print(f"# {golden_dir()}")
        print("\n".join(golden_labels()))
    elif args.what == "charts":
        print("\n".join(sorted(CHARTS)))
    elif args.what == "lie":
        print("\n".join(LIE_EXPORTS))
    return EXIT_OK


def cmd_export(args) -> int:
    if args.kind == "model":
        from .models import get_model
        from .models.registry import normalize_mode
        from .models.serialize import presentation_to_json

        P = get_model(args.name, normalize_mode(args.mode), args.order, args.kappa)
        _write(presentation_to_json(P), args.output)
    elif args.kind == "lie":
        from . import liebialg

        if args.name not in LIE_EXPORTS:
            raise UsageError(f"unknown Lie bialgebra {args.name!r}; see 'hopflab list lie'")
        _write(getattr(liebialg, LIE_EXPORTS[args.name])().to_json(), args.output)
    else:
        from .suites import run_suite

        rep = run_suite(args.name, None, args.mode, args.order, args.max_degree, args.kappa)
        _write(rep.to_json(), args.output)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "normalize": cmd_eval, "verify": cmd_verify, "list": cmd_list,
            "export": cmd_export}


def main(argv=None) -> int:
    from .constructions import ModeUnsupported
    from .models import IncompatibleMode, UnknownChart, UnknownModel
    from .parser import ModeViolation, ParseError

    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, UnknownModel, UnknownChart, IncompatibleMode, ModeUnsupported,
            ParseError, ModeViolation, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hopflab: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
