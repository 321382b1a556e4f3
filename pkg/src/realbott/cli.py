"""Command line interface.

Every subcommand prints one JSON document on stdout.  Errors go to stderr
as a single JSON line with a ``code`` field, and the exit status tells the
error class apart: 1 domain error, 2 budget exceeded, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canon import DEFAULT_ORBIT_BUDGET, bott_canon, bott_equivalent, iso_canon, orbit_forms
from .classify import classify_all, classify_stream
from .core import BottMatrix, encoding_key, is_bott
from .decompose import decompose
from .errors import BudgetExceeded, DomainError, MalformedInput
from .formats import format_matrix, parse_matrix, read_digraph6_file
from .invariants import betti, fingerprint

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _budget():
    raw = os.environ.get("BOTT_ORBIT_BUDGET")
    if raw is None:
        return DEFAULT_ORBIT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"BOTT_ORBIT_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("BOTT_ORBIT_BUDGET must be positive")
    return value


def _read_arg(text):
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc}") from None
    return text


def _matrix(args, text):
    return parse_matrix(_read_arg(text), args.format)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_check(args):
    text = _read_arg(args.matrix)
    m = parse_matrix(text, args.format)
    # parse_matrix already rejects cycles; run the minor test as well.
    is_bott(m, check_minors=m.n <= 12)
    _emit({"n": m.n, "bott": True, "strictly_upper": m.is_strictly_upper()})


def cmd_canon(args):
    m = _matrix(args, args.matrix)
    ic = iso_canon(m)
    rep = bott_canon(m, _budget())
    _emit({"n": m.n, "iso": ic.matrix.to_hex(), "witness": list(ic.witness),
           "bott": rep.canonical.to_hex(), "orbit_size": rep.orbit_size})


def cmd_orbit(args):
    m = _matrix(args, args.matrix)
    forms = sorted(orbit_forms(m, _budget()), key=lambda r: encoding_key(m.n, r))
    shown = forms if args.limit is None else forms[: args.limit]
    _emit({"n": m.n, "size": len(forms), "canon": BottMatrix._trusted(m.n, forms[0]).to_hex(),
           "members": [BottMatrix._trusted(m.n, f).to_hex() for f in shown]})


def cmd_classify(args):
    if args.stream:
        summary = classify_stream(read_digraph6_file(args.stream), _budget())
        if args.n is not None and summary.n != args.n:
            raise DomainError(f"stream has n={summary.n}, expected {args.n}")
    else:
        if args.n is None:
            raise UsageError("classify needs --n or --stream")
        summary = classify_all(args.n, args.workers, long_run=args.long_run)
    if args.csv:
        sys.stdout.write(summary.to_csv())
    else:
        _emit(summary.to_dict())


def cmd_invariants(args):
    m = _matrix(args, args.matrix)
    _emit(fingerprint(m).to_dict())


def cmd_betti(args):
    m = _matrix(args, args.matrix)
    b = betti(m)
    _emit({"n": m.n, "rank": m.rank(), "betti": list(b), "total": sum(b)})


def cmd_decompose(args):
    m = _matrix(args, args.matrix)
    d = decompose(m, _budget())
    out = d.to_dict()
    if args.witness:
        out["witness"] = format_matrix(d.witness, "bin")
    _emit(out)


def cmd_iso(args):
    a, b = _matrix(args, args.a), _matrix(args, args.b)
    _emit({"equivalent": bott_equivalent(a, b, _budget())})


def build_parser():
    p = _Parser(prog="realbott", description="Bott matrix classification tools")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(sp):
        sp.add_argument("--format", choices=["bin", "hex", "d6"], default=None,
                        help="input format (guessed when omitted)")
        return sp

    sp = with_format(sub.add_parser("check", help="validate a matrix"))
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_check)

    sp = with_format(sub.add_parser("canon", help="iso and Bott canonical forms"))
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_canon)

    sp = with_format(sub.add_parser("orbit", help="list the iso-classes of a Bott class"))
    sp.add_argument("matrix")
    sp.add_argument("--limit", type=int, default=None)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("classify", help="count Bott classes")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--stream", default=None, help="digraph6 file to classify")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--long-run", action="store_true")
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = with_format(sub.add_parser("invariants", help="invariant fingerprint"))
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_invariants)

    sp = with_format(sub.add_parser("betti", help="rational Betti numbers"))
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_betti)

    sp = with_format(sub.add_parser("decompose", help="indecomposable factors"))
    sp.add_argument("matrix")
    sp.add_argument("--witness", action="store_true")
    sp.set_defaults(func=cmd_decompose)

    sp = with_format(sub.add_parser("iso", help="test Bott equivalence"))
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_iso)
    return p


def _fail(code, exc, status):
    sys.stderr.write(json.dumps({"code": code, "error": str(exc)}) + "\n")
    return status


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except UsageError as exc:
        return _fail("usage", exc, EXIT_USAGE)
    except MalformedInput as exc:
        return _fail("malformed_input", exc, EXIT_USAGE)
    except BudgetExceeded as exc:
        return _fail("budget_exceeded", exc, EXIT_BUDGET)
    except DomainError as exc:
        return _fail(type(exc).__name__, exc, EXIT_DOMAIN)
    except IndexError as exc:
        return _fail("IndexError", exc, EXIT_DOMAIN)
    return EXIT_OK


def main():
    sys.exit(run())
