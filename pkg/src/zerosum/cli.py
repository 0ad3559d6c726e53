"""Command-line front end: ``zerosum <verb> [options]``.

Exit codes: 0 success, 1 a verify sweep found failures, 2 bad input.
"""

import argparse
import json
import sys

from . import structure as cl
from .ratios import check_necessary_conditions, decompose
from .sequences import Sequence
from .solutions import (
    affine_reduce,
    enumerate_solutions,
    minimal_basis,
    minimal_solutions,
    solution_dim,
    support_indices,
)
from .verify import CHECKS, SweepSpec, run_sweep

VERBS = ("solve", "dim", "minimal", "classify", "reconstruct", "affine", "ratio", "verify")


class UsageError(ValueError):
    pass


def _parser():
    ap = argparse.ArgumentParser(prog="zerosum", description=__doc__.splitlines()[0])
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("--seq", help="sequence as 'p=<int>;A=<c1>,<c2>,...'")
    ap.add_argument("--alpha", type=int, default=0)
    ap.add_argument("--mode", choices=("superset", "equal"), default="equal")
    ap.add_argument("--enum", choices=("direct", "mitm"), default="direct")
    ap.add_argument("--b", help="comma-separated residues of the second sequence (ratio)")
    ap.add_argument("--p", type=int)
    ap.add_argument("--l", type=int)
    ap.add_argument("--filter", default="all")
    ap.add_argument("--checks", default="dim_theorems", help="comma list or 'all'")
    ap.add_argument("--shard", default="0/1", help="i/n")
    ap.add_argument("--allow-large", action="store_true")
    ap.add_argument("--output", choices=("json", "text"), default="json")
    return ap


def _need_seq(args):
    if not args.seq:
        raise UsageError(f"{args.verb} needs --seq")
    return Sequence.parse(args.seq)


def _table(rows):
    return "\n".join("  ".join(str(c) for c in row) for row in rows)


def _solve(args):
    A = _need_seq(args)
    S = enumerate_solutions(A, args.alpha, mode=args.enum)
    d = S.as_dict()
    text = _table([["#", "support"]] + [[i, ",".join(map(str, s)) or "-"] for i, s in enumerate(d["solutions"], 1)])
    return d, text + f"\ndim {d['dim']}"


def _dim(args):
    A = _need_seq(args)
    d = solution_dim(A)
    return {"p": int(A.p), "l": len(A), "dim": d}, str(d)


def _minimal(args):
    A = _need_seq(args)
    S = enumerate_solutions(A)
    mins = [support_indices(m) for m in minimal_solutions(S)]
    basis = minimal_basis(A, S)
    d = {
        "p": int(A.p),
        "l": len(A),
        "count": len(mins),
        "minimal": mins,
        "basis": None if basis is None else [[i + 1 for i in row.nonzero()[0].tolist()] for row in basis],
    }
    return d, _table([[",".join(map(str, m))] for m in mins]) + f"\ncount {len(mins)}"


def _classify(args):
    A = _need_seq(args)
    c = cl.classify(A)
    d = c.as_dict(verified_dim=solution_dim(A))
    text = _table([[k, v] for k, v in d.items()])
    return d, text


def _reconstruct(args):
    A = _need_seq(args)
    res = cl.reconstruct(A, args.mode)
    d = res.as_dict(A.p)
    return d, _table([list(c) for c in res.classes])


def _affine(args):
    A = _need_seq(args)
    red = affine_reduce(A, args.alpha)
    if red is None:
        return {"p": int(A.p), "l": len(A), "alpha": args.alpha % A.p, "I": None}, "no witness"
    S = enumerate_solutions(A, args.alpha)
    d = {
        "p": int(A.p),
        "l": len(A),
        "alpha": args.alpha % A.p,
        "I": red.indices,
        "reduced": str(red.reduced),
        "dim": S.affine_rank,
        "reduced_dim": solution_dim(red.reduced),
    }
    return d, _table([[k, v] for k, v in d.items()])


def _ratio(args):
    A = _need_seq(args)
    if not args.b:
        raise UsageError("ratio needs --b")
    B = [int(x) for x in args.b.split(",")]
    dec = decompose(A, B)
    d = {
        "p": int(A.p),
        "l": len(A),
        "d": dec.d,
        "ratios": list(dec.ratios),
        "parts": [list(x) for x in dec.parts],
        "ratio_sets": [sorted(s) for s in dec.ratio_sets],
        "conditions": check_necessary_conditions(A, B).as_dict(),
    }
    rows = [[lam, ",".join(map(str, part)), sorted(s)] for lam, part, s in zip(dec.ratios, dec.parts, dec.ratio_sets)]
    return d, _table(rows) + f"\npassed {d['conditions']['passed']}"


def _verify(args):
    if args.p is None or args.l is None:
        raise UsageError("verify needs --p and --l")
    checks = CHECKS if args.checks == "all" else tuple(args.checks.split(","))
    try:
        k, n = (int(x) for x in args.shard.split("/"))
    except ValueError:
        raise UsageError(f"bad --shard {args.shard!r}; expected i/n") from None
    spec = SweepSpec(args.p, args.l, args.filter, checks, (k, n), args.allow_large)
    report = run_sweep(spec)
    d = report.as_dict()
    text = f"checked {d['checked']}  failures {len(d['failures'])}  {d['elapsed_ms']} ms\n"
    text += _table([[k, v] for k, v in d["tallies"].items()])
    for f in d["failures"]:
        text += f"\nFAIL {f['check']} {f['sequence']} {f['claim']}: expected {f['expected']}, got {f['got']}"
    return d, text, report.exit_code


_HANDLERS = {
    "solve": _solve,
    "dim": _dim,
    "minimal": _minimal,
    "classify": _classify,
    "reconstruct": _reconstruct,
    "affine": _affine,
    "ratio": _ratio,
    "verify": _verify,
}


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = _parser().parse_args(argv)
    try:
        out = _HANDLERS[args.verb](args)
    except ValueError as exc:  # covers parse, spec and budget errors
        print(f"zerosum {args.verb}: {exc}", file=sys.stderr)
        return 2
    data, text = out[0], out[1]
    code = out[2] if len(out) > 2 else 0
    print(json.dumps(data) if args.output == "json" else text, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
