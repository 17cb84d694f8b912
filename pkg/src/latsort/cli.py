"""``latsort`` command line: sort, verify, table1, powerset-demo, bench."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .combinatorics import DEFAULT_CAP
from .errors import LatticeError, NotDistributiveError
from .instances import DivisibilityLattice, PowersetLattice, lattice_from_spec
from .sort import (
    Sequence,
    check_sorting_properties,
    preserves_multiset,
    sort_sequence,
    weak_sort_bruteforce,
    weak_sort_distributive_dp,
)

TABLE1 = [
    ((1,), (1,)),
    ((1, 2), (1, 2)),
    ((1, 2, 3), (1, 1, 6)),
    ((1, 2, 3, 4), (1, 1, 2, 12)),
    ((1, 2, 3, 4, 5), (1, 1, 1, 2, 60)),
    ((1, 2, 3, 4, 5, 6), (1, 1, 1, 2, 6, 60)),
    ((1, 2, 3, 4, 5, 6, 7), (1, 1, 1, 1, 2, 6, 420)),
    ((1, 2, 3, 4, 5, 6, 7, 8), (1, 1, 1, 1, 2, 2, 12, 840)),
]


class UsageError(LatticeError):
    pass


def _load_sequences(args, lattice) -> list[Sequence]:
    if args.input:
        try:
            with open(args.input) as fh:
                lines = [ln.strip() for ln in fh]
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
        return [Sequence.parse(lattice, ln) for ln in lines if ln and not ln.startswith("#")]
    if args.seq is None:
        raise UsageError("give --seq or --input")
    return [Sequence.parse(lattice, args.seq)]


def _lattice(args):
    lattice = lattice_from_spec(args.lattice)
    if getattr(args, "algo", "auto") == "dp" and not lattice.distributive:
        raise NotDistributiveError(f"descriptor not distributive: {lattice} cannot use --algo dp")
    return lattice


def run_sort(args, out=None) -> int:
    out = out or sys.stdout
    lattice = _lattice(args)
    for i, x in enumerate(_load_sequences(args, lattice)):
        rep = sort_sequence(x, args.algo, args.cap)
        if args.format == "json-lines":
            record = {
                "input": [lattice.format(a) for a in x],
                "output": [lattice.format(a) for a in rep.output],
                "algorithm": rep.algorithm,
                "meets": rep.meet_count,
                "joins": rep.join_count,
            }
            print(json.dumps(record), file=out)
        else:
            if i:
                print(file=out)
            print(f"input:     {x.format()}", file=out)
            print(f"output:    {rep.output.format()}", file=out)
            print(f"algorithm: {rep.algorithm}", file=out)
            print(f"meets:     {rep.meet_count}", file=out)
            print(f"joins:     {rep.join_count}", file=out)
    return 0


def _flag(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def run_verify(args, out=None) -> int:
    out = out or sys.stdout
    lattice = _lattice(args)
    status = 0
    for i, x in enumerate(_load_sequences(args, lattice)):
        rep = check_sorting_properties(x, trials=args.trials, seed=args.seed, cap=args.cap, algorithm=args.algo)
        if args.format == "json-lines":
            print(json.dumps({
                "input": [lattice.format(a) for a in x],
                "output": [lattice.format(a) for a in rep.output],
                "algorithm": rep.algorithm,
                "nondecreasing": rep.nondecreasing,
                "idempotent": rep.idempotent,
                "permutation_invariant": rep.permutation_invariant,
                "bounded": rep.bounded,
                "multiset_preserved": rep.multiset_preserved,
            }), file=out)
        else:
            if i:
                print(file=out)
            print(f"input:     {x.format()}", file=out)
            print(f"output:    {rep.output.format()}  ({rep.algorithm})", file=out)
            print(f"{_flag(rep.nondecreasing)}  nondecreasing", file=out)
            print(f"{_flag(rep.idempotent)}  idempotent", file=out)
            print(f"{_flag(rep.permutation_invariant)}  permutation invariant ({rep.trials} trials, seed {args.seed})", file=out)
            print(f"{_flag(rep.bounded)}  bounded by meet/join of input", file=out)
            if rep.multiset_preserved:
                print("note: output is a rearrangement of the input (same multiset)", file=out)
            else:
                print("note: output multiset differs from the input", file=out)
            for msg in rep.failures:
                print(f"  {msg}", file=out)
        if not rep.all_passed:
            status = 1
    return status


def _tuple_text(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def run_table1(args, out=None) -> int:
    out = out or sys.stdout
    d = DivisibilityLattice()
    matches = 0
    print(f"{'x':<20} {'brute force':<22} {'dp':<22} status", file=out)
    for row, expected in TABLE1:
        x = Sequence(d, row)
        brute = weak_sort_bruteforce(x, args.cap).output.items
        dp = weak_sort_distributive_dp(x).output.items
        ok = brute == expected and dp == expected
        matches += ok
        cells = [_tuple_text(t) for t in (row, brute, dp)]
        print(f"{cells[0]:<20} {cells[1]:<22} {cells[2]:<22} {'MATCH' if ok else 'MISMATCH'}", file=out)
    print(f"{matches}/{len(TABLE1)} rows match", file=out)
    return 0 if matches == len(TABLE1) else 1


def run_powerset_demo(args, out=None) -> int:
    out = out or sys.stdout
    d = PowersetLattice(("x", "y", "z"))
    x = Sequence.parse(d, "{x},{y},{z}")
    rep = sort_sequence(x, args.algo, args.cap)
    expected = (0, 0, d.full)
    print(f"lattice:   {d}", file=out)
    print(f"input:     {x.format()}", file=out)
    print(f"output:    {rep.output.format()}  ({rep.algorithm})", file=out)
    same = preserves_multiset(x, rep.output)
    print(f"multiset preserved: {'yes' if same else 'no'}", file=out)
    ok = rep.output.items == expected and not same
    print("MATCH" if ok else "MISMATCH", file=out)
    return 0 if ok else 1


def run_bench(args, out=None) -> int:
    out = out or sys.stdout
    d = DivisibilityLattice()
    print("n,algorithm,meets,joins,wall_ns", file=out)
    for n in range(args.n_min, args.n_max + 1):
        x = Sequence(d, range(1, n + 1))
        for name, fn in (
            ("brute-force", lambda: weak_sort_bruteforce(x, args.cap)),
            ("distributive-dp", lambda: weak_sort_distributive_dp(x)),
        ):
            if name == "brute-force" and args.cap is not None and n > args.cap:
                print(f"{n},{name},,,skipped", file=out)
                continue
            t0 = time.perf_counter_ns()
            rep = fn()
            wall = time.perf_counter_ns() - t0
            print(f"{n},{name},{rep.meet_count},{rep.join_count},{wall}", file=out)
    return 0


def _cap(text: str):
    if text.lower() in ("none", "off"):
        return None
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("cap must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latsort", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algo", choices=["auto", "brute", "dp", "classical"], default="auto")
    common.add_argument("--cap", type=_cap, default=DEFAULT_CAP,
                        help="largest n for subset enumeration ('none' disables)")
    common.add_argument("--format", choices=["text", "json-lines"], default="text")

    seq = argparse.ArgumentParser(add_help=False)
    seq.add_argument("--lattice", required=True,
                     help="int | div | m3 | n5 | powerset:<names> | product:<spec>+<spec> | table:<path>")
    seq.add_argument("--seq", help="comma-separated elements")
    seq.add_argument("--input", help="file with one sequence per line")
    seq.add_argument("--seed", type=int, default=0)
    seq.add_argument("--trials", type=int, default=10)

    sub.add_parser("sort", parents=[common, seq], help="sort one or more sequences")
    sub.add_parser("verify", parents=[common, seq], help="check the sorting properties")
    sub.add_parser("table1", parents=[common], help="reproduce the gcd/lcm example table")
    sub.add_parser("powerset-demo", parents=[common], help="sort ({x},{y},{z}) in the subsets of {x,y,z}")
    bench = sub.add_parser("bench", parents=[common], help="operation counts on (1..n) under gcd/lcm")
    bench.add_argument("--n-min", type=int, default=1)
    bench.add_argument("--n-max", type=int, default=12)
    return parser


COMMANDS = {
    "sort": run_sort,
    "verify": run_verify,
    "table1": run_table1,
    "powerset-demo": run_powerset_demo,
    "bench": run_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (LatticeError, ValueError) as exc:
        print(f"latsort: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
