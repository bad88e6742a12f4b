"""Command-line front end.

Exit codes: 0 success, 2 format problems, 3 size guard, 4 parse or usage
errors, 5 internal-consistency failures.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from math import comb

from .config import resolve_max_terms
from .determinants import (
    SHIPPED_POLICY,
    Theorem321Policy,
    closed_det,
    corank_22n,
    degree_boundary,
    det_dispatch,
    hyperplucker,
    make_degenerate,
    method_for,
    minors,
    verify_format,
)
from .errors import FormatError, HyperdetError, ParseError
from .exactalg import render_monomial
from .mdmatrix import Format, Kind, MDMatrix, classify_format, load_matrix, m_sequence, symbolic
from .qpaths import diagonal_monomial

COMMANDS = ("classify", "det", "closed-det", "minors", "plucker", "corank",
            "make-degenerate", "verify", "diagonal")
_INLINE = re.compile(r"^\s*\d+(\s*x\s*\d+)*\s*$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _int_flag(text: str) -> int:
    try:
        return int(float(text)) if re.search(r"[eE.]", text) else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("input", help="matrix JSON file, or a format such as 2x2x3 or [2,2,3]")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound", type=int, default=10)
    common.add_argument("--max-terms", type=_int_flag, default=None,
                        help="term cap (default: $HYPERDET_MAX_TERMS or 10^7)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--policy", default="shipped",
                        help="gammaKey/source/offset, e.g. byTailOfSigmaQ/sigmaQ/k+1")
    common.add_argument("--samples", type=int, default=50)
    common.add_argument("-o", "--output", default=None)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = _Parser(prog="hyperdet", description="Exact determinants of multidimensional matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "make-degenerate":
            p.add_argument("--witness", default=None, help="write the witness to this file")
        if name == "diagonal":
            p.add_argument("--variant", choices=("closed", "boundary"), default="closed")
    return parser


def read_input(text: str) -> MDMatrix:
    """An inline format yields the generic symbolic matrix; otherwise a file is read."""
    if _INLINE.match(text):
        return symbolic(Format(tuple(int(x) for x in text.replace(" ", "").split("x"))))
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            dims = json.loads(stripped)
            return symbolic(Format(tuple(int(x) for x in dims)))
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad format {text!r}: {exc}") from None
    try:
        return load_matrix(text)
    except OSError as exc:
        raise ParseError(f"cannot read {text}: {exc.strerror}") from None


def _policy(name: str) -> Theorem321Policy:
    if name in ("shipped", "default"):
        return SHIPPED_POLICY
    try:
        return Theorem321Policy.parse(name)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _emit(args, payload) -> None:
    if isinstance(payload, (dict, list)):
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = payload if payload.endswith("\n") else payload + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _selection_text(sel) -> str:
    return "x".join("{" + ",".join(str(i) for i in s) + "}" for s in sel)


def _engine_kw(args) -> dict:
    return dict(policy=_policy(args.policy), workers=max(1, args.threads),
                max_terms=resolve_max_terms(args.max_terms))


# -- commands ---------------------------------------------------------------------

def cmd_classify(args) -> int:
    fmt = read_input(args.input).format
    cls = classify_format(fmt)
    info = {"format": list(fmt.dims), "class": cls.kind.value, "mseq": list(m_sequence(fmt))}
    if cls.direction is not None and cls.kind in (Kind.BOUNDARY, Kind.GRASSMAN):
        info["direction"] = cls.direction
    if cls.kind in (Kind.BOUNDARY, Kind.SQUARE2D):
        info["degree"] = degree_boundary(fmt)
    if cls.kind is Kind.GRASSMAN:
        others = [n for k, n in enumerate(fmt.dims) if k != cls.direction - 1]
        info["pluckerLength"] = comb(fmt.dims[cls.direction - 1], m_sequence(others)[-1])
    if cls.kind is Kind.INNER:
        try:
            info["method"] = method_for(fmt)
        except FormatError:
            info["method"] = "unsupported"
    if args.json:
        _emit(args, info)
    else:
        lines = [f"format={fmt}"] + [
            f"{k}={','.join(map(str, v)) if isinstance(v, list) else v}"
            for k, v in info.items() if k != "format"
        ]
        _emit(args, "\n".join(lines))
    return 0


def cmd_det(args) -> int:
    a = read_input(args.input)
    res = det_dispatch(a, **_engine_kw(args))
    _emit(args, res.to_json() if args.json else res.text())
    return 0


def cmd_closed_det(args) -> int:
    a = read_input(args.input)
    res = closed_det(a, **_engine_kw(args))
    if args.json:
        out = res.to_json()
        out["factors"] = [{"selections": [list(s) for s in f.selections], "value": f.result.text()}
                          for f in res.extra["factors"]]
        _emit(args, out)
    else:
        _emit(args, res.text())
    return 0


def cmd_minors(args) -> int:
    a = read_input(args.input)
    items = minors(a, **_engine_kw(args))
    if args.json:
        _emit(args, [{"selections": [list(s) for s in f.selections], "method": f.result.method,
                      "value": f.result.text()} for f in items])
    else:
        _emit(args, "\n".join(f"{_selection_text(f.selections)}\t{f.result.text()}" for f in items))
    return 0


def cmd_plucker(args) -> int:
    a = read_input(args.input)
    pv = hyperplucker(a, **_engine_kw(args))
    if args.json:
        _emit(args, {"direction": pv.direction, "allVanish": pv.all_vanish,
                     "coordinates": [{"columns": list(J), "value": r.text()} for J, r in pv.coordinates]})
    else:
        lines = ["{" + ",".join(map(str, J)) + "}\t" + r.text() for J, r in pv.coordinates]
        lines.append(f"allVanish={'true' if pv.all_vanish else 'false'}")
        _emit(args, "\n".join(lines))
    return 0


def cmd_corank(args) -> int:
    rep = corank_22n(read_input(args.input))
    if args.json:
        _emit(args, rep.to_json())
    else:
        _emit(args, f"rank={rep.rank}\ncorankOne={'true' if rep.corank_one else 'false'}")
    return 0


def cmd_make_degenerate(args) -> int:
    fmt = read_input(args.input).format
    a, w = make_degenerate(fmt, args.seed, args.bound)
    if args.witness:
        with open(args.witness, "w") as fh:
            fh.write(json.dumps(w.to_json(), indent=2) + "\n")
        _emit(args, a.to_json())
    else:
        _emit(args, {"matrix": a.to_json(), "witness": w.to_json()})
    return 0


def cmd_verify(args) -> int:
    fmt = read_input(args.input).format
    kw = _engine_kw(args)
    rep = verify_format(fmt, samples=args.samples, seed=args.seed, bound=args.bound, **kw)
    _emit(args, rep.to_json())
    return 0 if rep.passed else 5


def cmd_diagonal(args) -> int:
    fmt = read_input(args.input).format
    mono = diagonal_monomial(fmt.dims, args.variant, resolve_max_terms(args.max_terms))
    if args.json:
        _emit(args, {"format": list(fmt.dims), "variant": args.variant, "monomial": render_monomial(mono)})
    else:
        _emit(args, render_monomial(mono))
    return 0


HANDLERS = {
    "classify": cmd_classify, "det": cmd_det, "closed-det": cmd_closed_det, "minors": cmd_minors,
    "plucker": cmd_plucker, "corank": cmd_corank, "make-degenerate": cmd_make_degenerate,
    "verify": cmd_verify, "diagonal": cmd_diagonal,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return HANDLERS[args.command](args)
    except HyperdetError as exc:
        print(f"hyperdet: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
