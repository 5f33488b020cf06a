"""
Command-line front end.

Exit codes: 0 on success or a passing check, 1 when a check ran and
failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import characterize as ch
from . import f2, nets, verify

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

BUILTINS = {"I": f2.identity, "J": f2.anti_diagonal, "P": f2.pascal}

GEN_KINDS = {
    "identity": lambda m, rng: f2.identity(m),
    "pascal": lambda m, rng: f2.pascal(m),
    "antidiag": lambda m, rng: f2.anti_diagonal(m),
    "random-lower": f2.random_lower,
    "random-upper": f2.random_upper,
    "random-gl": f2.random_nonsingular,
}


class UsageError(Exception):
    pass


def load_matrices(specs: Sequence[str], stdin=None) -> list[f2.F2Matrix]:
    """Resolve matrix arguments: ``@I:m``/``@J:m``/``@P:m``, ``-`` or a path.

    A file (or stdin) may hold several matrices.
    """
    out: list[f2.F2Matrix] = []
    for spec in specs:
        if spec.startswith("@"):
            name, _, size = spec[1:].partition(":")
            if name not in BUILTINS or not size.isdigit():
                raise UsageError(f"unknown built-in {spec!r}; use @I:m, @J:m or @P:m")
            out.append(BUILTINS[name](int(size)))
            continue
        if spec == "-":
            text = (stdin or sys.stdin).read()
        else:
            try:
                with open(spec) as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {spec}: {exc.strerror}")
        mats = f2.parse_matrices(text)
        if not mats:
            raise UsageError(f"no matrix found in {spec}")
        out.extend(mats)
    if not out:
        raise UsageError("no generator matrices given")
    dims = {a.dim for a in out}
    if len(dims) != 1:
        raise UsageError(f"generator matrices have different dimensions {sorted(dims)}")
    return out


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _table(rows: Sequence[tuple[str, object]], out) -> None:
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        out.write(f"{key.ljust(width)}  {value}\n")


# -- verbs ---------------------------------------------------------------------------

def cmd_gen_matrix(args, out) -> int:
    rng = np.random.default_rng(args.seed)
    out.write(f2.format_matrix(GEN_KINDS[args.kind](args.m, rng)))
    return EXIT_OK


def cmd_points(args, out) -> int:
    gens = load_matrices(args.gen)
    out.write(nets.format_points(nets.net_points(gens), args.format))
    return EXIT_OK


def cmd_check_net(args, out) -> int:
    gens = load_matrices(args.gen)
    m, s = gens[0].dim, len(gens)
    if not 0 <= args.t <= m:
        raise UsageError(f"--t must be in 0..{m}")
    if args.geometric:
        pts = nets.net_points(gens)
        verdict = verify.is_net_geometric(pts, args.t, max_m=args.max_m)
        best = verify.t_value_geometric(pts, max_m=args.max_m)
        if args.json:
            _emit_json(verdict.as_dict(m, s, strength=m - best), out)
        else:
            rows = [("m", m), ("s", s), ("t", args.t), ("t-value", best),
                    ("method", "geometric"),
                    ("verdict", "PASS" if verdict.passed else "FAIL")]
            if verdict.witness is not None:
                w = verdict.witness
                rows.append(("witness", f"shape={list(w.shape)} offsets={list(w.offsets)} "
                                        f"count={verdict.witness_count}"))
            _table(rows, out)
        return EXIT_OK if verdict.passed else EXIT_FAILED
    rep = verify.strength_by_rank(gens)
    passed = rep.t_value <= args.t
    if args.json:
        _emit_json(rep.as_dict(args.t), out)
    else:
        rows = [("m", m), ("s", s), ("t", args.t), ("t-value", rep.t_value),
                ("strength", rep.strength), ("method", "rank"),
                ("verdict", "PASS" if passed else "FAIL")]
        if rep.witness is not None:
            rows.append(("witness", list(rep.witness)))
        _table(rows, out)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_check_seq(args, out) -> int:
    gens = [nets.MatrixPrefix(a) for a in load_matrices(args.gen)]
    depth = args.depth or gens[0].depth
    if not 1 <= depth <= gens[0].depth:
        raise UsageError(f"--depth must be in 1..{gens[0].depth}")
    rep = verify.check_sequence_prefix(gens, depth, args.t)
    if args.json:
        _emit_json(rep.as_dict(), out)
    else:
        for d in rep.depths:
            line = f"depth {d.depth:>2}  t-value {d.t_value:>2}  {'pass' if d.passed else 'FAIL'}"
            if not d.passed:
                line += f"  witness {list(d.witness)}"
            out.write(line + "\n")
        fail = rep.first_failure
        if fail is None:
            out.write(f"certified to depth {depth}\n")
        else:
            out.write(f"rejected at depth {fail.depth}\n")
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_decompose(args, out) -> int:
    mats = load_matrices(args.gen)
    if len(mats) not in (2, 3):
        raise UsageError(f"decompose takes 2 or 3 matrices, got {len(mats)}")
    m, s = mats[0].dim, len(mats)
    names = ("L1", "L2", "U", "M") if s == 3 else ("L", "U", "M")
    try:
        dec = ch.decompose_0m3(*mats) if s == 3 else ch.decompose_0m2(*mats)
    except ch.NotANet as exc:
        if args.json:
            _emit_json({"kind": "net", "m": m, "s": s, "t": 0, "strength": None,
                        "passed": False, "witness": None, "checked_depths": [],
                        "reason": exc.reason, "minor": exc.minor}, out)
        else:
            msg = f"not a (0,{m},{s})-net: {exc.reason}"
            if exc.minor is not None:
                msg += f" (minor {exc.minor})"
            out.write(msg + "\n")
        return EXIT_FAILED
    if args.json:
        _emit_json({"kind": "net", "m": m, "s": s, "t": 0, "strength": m,
                    "passed": True, "witness": None, "checked_depths": [],
                    "reason": None,
                    "factors": {n: a.to_strings() for n, a in zip(names, dec.factors())}},
                   out)
    else:
        f2.write_matrices(dec.factors(), out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if not 1 <= args.m <= ch.ENUMERATION_MAX_M:
        raise UsageError(f"--m must be in 1..{ch.ENUMERATION_MAX_M}")
    first = True
    for triple in ch.enumerate_0m3(args.m):
        if not first:
            out.write("\n")
        out.write("".join(f2.format_matrix(a) for a in triple))
        first = False
    return EXIT_OK


def cmd_sample(args, out) -> int:
    rng = np.random.default_rng(args.seed)
    f2.write_matrices(ch.random_0m3(args.m, rng), out)
    return EXIT_OK


def cmd_discrepancy(args, out) -> int:
    if args.points:
        if args.gen:
            raise UsageError("give generator matrices or --points, not both")
        try:
            with open(args.points) as fh:
                pts = nets.parse_points(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.points}: {exc.strerror}")
    else:
        pts = nets.net_points(load_matrices(args.gen))
    out.write(f"{verify.l2_star_discrepancy(pts):.12g}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitalnets",
        description="Generator matrices of digital nets and sequences in base 2.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen-matrix", help="print a structural or random matrix")
    p.add_argument("kind", choices=sorted(GEN_KINDS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen_matrix)

    p = sub.add_parser("points", help="print the points of a digital net")
    p.add_argument("gen", nargs="+")
    p.add_argument("--format", choices=nets.POINT_FORMATS, default="frac")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("check-net", help="decide the (t,m,s)-net property")
    p.add_argument("gen", nargs="+")
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--geometric", action="store_true",
                   help="count points in elementary intervals instead of ranks")
    p.add_argument("--max-m", type=int, default=verify.GEOMETRIC_MAX_M,
                   help="size cap for the geometric check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_net)

    p = sub.add_parser("check-seq", help="check a sequence prefix depth by depth")
    p.add_argument("gen", nargs="+")
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_seq)

    p = sub.add_parser("decompose", help="factor a (0,m,2) pair or (0,m,3) triple")
    p.add_argument("gen", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="list every (0,m,3)-net triple")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="draw a uniform (0,m,3)-net triple")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("discrepancy", help="squared L2 star discrepancy")
    p.add_argument("gen", nargs="*")
    p.add_argument("--points", default=None)
    p.set_defaults(func=cmd_discrepancy)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"digitalnets {args.verb}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
