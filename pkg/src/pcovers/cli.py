"""Command-line front end.

    pcovers validate PATH --kind cover|hurwitz
    pcovers transform PATH --step eliminate-mup|stabilize|synthesize|pipeline
    pcovers hodge --g G --kind beta|alpha --j J --b B [--nuA A] [--nu2 N] [--sweep]

Documents go to stdout, a one-line verdict to stderr.  Exit status: 0 on
success, 1 when the data violate a mathematical condition, 2 on usage or
parse errors.
"""

import argparse
import sys

from . import documents as doc
from .covers import ValidationReport, validate_cover
from .field import FieldSpec
from .hodge import ReductionConfig, ord_lambda, sweep_configs
from .hurwitz import validate_hurwitz
from .transforms import (PreconditionError, base_thickness, eliminate_mu_p,
                         pipeline, stabilize, synthesize_hurwitz)

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(args):
    if args.field_p is None:
        if args.field_e is not None:
            raise UsageError("--field-e needs --field-p")
        return None
    try:
        return FieldSpec(args.field_p, args.field_e or 1)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _report_doc(rep, F=None):
    return doc.dumps(doc.document("report", rep.as_dict(), F))


def _emit(out, text, verdict):
    out.write(text)
    print(verdict, file=sys.stderr)


def cmd_validate(args, out):
    F = _field(args)
    text = _read(args.path)
    if args.kind == "cover":
        c = doc.load_cover(text, F)
        rep, F = validate_cover(c), c.field
    else:
        H, F = doc.load_hurwitz(text, F)
        rep = validate_hurwitz(H)
    n = len(rep.violations)
    _emit(out, _report_doc(rep, F), "valid" if rep.ok else f"invalid: {n} violation(s)")
    return OK if rep.ok else VIOLATION


def cmd_transform(args, out):
    F = _field(args)
    c = doc.load_cover(_read(args.path), F)
    try:
        if args.step == "eliminate-mup":
            text = doc.dump_cover(eliminate_mu_p(c))
        elif args.step == "stabilize":
            text = doc.dump_cover(stabilize(c))
        elif args.step == "synthesize":
            text = doc.dump_hurwitz(synthesize_hurwitz(c), c.field)
        else:
            c2, H = pipeline(c)
            payload = {"cover": doc.encode_cover(c2), "hurwitz": doc.encode_hurwitz(H),
                       "x_thickness": dict(sorted(base_thickness(H, c2).items()))}
            text = doc.dumps(doc.document("pipeline", payload, c.field))
    except PreconditionError as exc:
        rep = exc.report
        if rep.ok:
            rep.add("precondition", args.step, str(exc))
        _emit(out, _report_doc(rep, c.field), f"precondition failed: {exc}")
        return VIOLATION
    except (ValueError, ArithmeticError) as exc:
        rep = ValidationReport()
        rep.add("precondition", args.step, str(exc))
        _emit(out, _report_doc(rep, c.field), f"precondition failed: {exc}")
        return VIOLATION
    _emit(out, text, f"{args.step}: done")
    return OK


def cmd_hodge(args, out):
    if args.sweep:
        cfgs = sweep_configs(char2=args.char2)
    else:
        missing = [k for k in ("g", "kind", "j", "b") if getattr(args, k) is None]
        if missing:
            raise UsageError("missing " + ", ".join("--" + k for k in missing))
        try:
            cfgs = [ReductionConfig(args.g, args.kind, args.j, args.b, args.nuA, args.nu2)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        reports = [ord_lambda(cfg) for cfg in cfgs]
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    if args.sweep:
        payload = [{"config": doc.encode_hodge_config(cfg), "report": doc.encode_hodge_report(r)}
                   for cfg, r in zip(cfgs, reports)]
        bad = sum(not r.ok for r in reports)
        verdict = f"{len(reports) - bad}/{len(reports)} configurations within the bounds"
        _emit(out, doc.dumps(doc.document("hodge_sweep", payload)), verdict)
    else:
        r = reports[0]
        payload = {"config": doc.encode_hodge_config(cfgs[0]), "report": doc.encode_hodge_report(r)}
        if r.ok:
            verdict = f"ok: {r.lower} <= ord = {r.ord_lambda} <= {r.upper}"
        else:
            verdict = f"FAIL: ord = {r.ord_lambda} outside [{r.lower}, {r.upper}]"
        _emit(out, doc.dumps(doc.document("hodge_report", payload)), verdict)
        bad = not r.ok
    return VIOLATION if bad else OK


def build_parser():
    ap = argparse.ArgumentParser(prog="pcovers", description=__doc__.split("\n")[0])
    ap.add_argument("--field-p", type=int, help="characteristic, if the document omits its field")
    ap.add_argument("--field-e", type=int, help="extension degree (default 1)")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check a cover or Hurwitz graph document")
    v.add_argument("path")
    v.add_argument("--kind", choices=("cover", "hurwitz"), required=True)
    v.set_defaults(func=cmd_validate)

    t = sub.add_parser("transform", help="run a construction on a cover document")
    t.add_argument("path")
    t.add_argument("--step", required=True,
                   choices=("eliminate-mup", "stabilize", "synthesize", "pipeline"))
    t.set_defaults(func=cmd_transform)

    h = sub.add_parser("hodge", help="valuation of the Hodge section at a two-component fibre")
    h.add_argument("--g", type=int)
    h.add_argument("--kind", choices=("beta", "alpha"))
    h.add_argument("--j", type=int)
    h.add_argument("--b", type=int)
    h.add_argument("--nuA", type=int, default=0)
    h.add_argument("--nu2", type=int)
    h.add_argument("--sweep", action="store_true", help="run the full configuration sweep")
    h.add_argument("--char2", action="store_true", help="with --sweep: the residue characteristic 2 sweep")
    h.set_defaults(func=cmd_hodge)
    return ap


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except (UsageError, doc.DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
