"""Command-line front end: ``witcount <command> ...``.

Exit codes: 0 success, 1 correctness failure (oracle mismatch or a failed
exactness check), 2 usage, I/O or parse error.
"""
import argparse
import json
import sys
import time

from .arith import OpCounter
from .candidates import count_candidates_profile
from .check import bench_rows, oracle_check, random_instances
from .errors import CapacityError, ExactnessError, ParseError, SizeGuardError
from .hypergraph import NoInstance, count_perfect_matchings, parse_hypergraph, reduce_to_witness_instance
from .instance import DEFAULT_MAX_D, build_char_table, parse_instance, to_bits
from .witness import count_witnesses


class UsageError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _ms(start):
    return round((time.perf_counter() - start) * 1000, 3)


def _summary(inst):
    return {"d": inst.d, "m": inst.m, "k": inst.k, "t": to_bits(inst.target, inst.d)}


def _emit(report, plain):
    if not plain:
        print(json.dumps(report, indent=2))
        return
    for key, val in report.items():
        if isinstance(val, dict):
            val = " ".join(f"{k}={v}" for k, v in val.items())
        elif isinstance(val, list):
            val = " ".join(str(v) for v in val)
        print(f"{key}: {val}")


def _load_instance(args):
    start = time.perf_counter()
    inst = parse_instance(_read(args.file), dedupe=args.dedupe, max_d=args.max_d)
    return inst, _ms(start)


def cmd_count(args):
    t0 = time.perf_counter()
    inst, parse_ms = _load_instance(args)
    counter = OpCounter()
    start = time.perf_counter()
    profile = count_witnesses(inst, counter=counter, threads=args.threads)
    report = {
        "instance": _summary(inst),
        "profile": profile.as_dict(),
    }
    if args.cumulative:
        report["cumulative"] = [str(v) for v in profile.cumulative()]
    report["timing_ms"] = {"parse": parse_ms, "count": _ms(start), "total": _ms(t0)}
    report["ops"] = counter.as_dict()
    _emit(report, args.plain)
    return 0


def cmd_candidates(args):
    t0 = time.perf_counter()
    inst, parse_ms = _load_instance(args)
    counter = OpCounter()
    start = time.perf_counter()
    cand = count_candidates_profile(build_char_table(inst), inst.target, inst.k, counter=counter, threads=args.threads)
    report = {
        "instance": _summary(inst),
        "profile": {"cand": [str(c) for c in cand]},
        "timing_ms": {"parse": parse_ms, "count": _ms(start), "total": _ms(t0)},
        "ops": counter.as_dict(),
    }
    _emit(report, args.plain)
    return 0


def cmd_matchings(args):
    t0 = time.perf_counter()
    g = parse_hypergraph(_read(args.file))
    parse_ms = _ms(t0)
    reduced = reduce_to_witness_instance(g, max_d=args.max_d)
    counter = OpCounter()
    start = time.perf_counter()
    count = count_perfect_matchings(g, counter=counter, max_d=args.max_d)
    report = {"hypergraph": {"n": g.n, "l": g.l, "edges": len(g.edges)}, "matchings": str(count)}
    if isinstance(reduced, NoInstance):
        report["reason"] = reduced.reason
    else:
        report["instance"] = _summary(reduced)
    report["timing_ms"] = {"parse": parse_ms, "count": _ms(start), "total": _ms(t0)}
    report["ops"] = counter.as_dict()
    _emit(report, args.plain)
    return 0


def _random_spec(tokens, seed):
    spec = {"seed": seed if seed is not None else 0, "count": 200, "dmax": 6, "kmax": 5}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in spec:
            raise UsageError(f"bad --random setting {tok!r}; use seed=, count=, dmax=, kmax=")
        try:
            spec[key] = int(val)
        except ValueError:
            raise UsageError(f"bad integer in {tok!r}") from None
    return spec


def cmd_oracle_check(args):
    if args.random is not None:
        spec = _random_spec(args.random, args.seed)
        instances = random_instances(spec["seed"], spec["count"], spec["dmax"], spec["kmax"])
        label = " ".join(f"{k}={v}" for k, v in spec.items())
    elif args.file:
        instances = [parse_instance(_read(args.file), dedupe=args.dedupe, max_d=args.max_d)]
        label = args.file
    else:
        raise UsageError("oracle-check needs an instance file or --random")
    start = time.perf_counter()
    result = oracle_check(instances, fast=count_witnesses)
    if result.mismatch is not None:
        print(f"FAIL {label}", file=sys.stderr)
        print(result.mismatch.report(), file=sys.stderr)
        return 1
    print(
        f"PASS {label}: {result.checked} instances, "
        f"{result.brute_runs} enumeration and {result.dp_runs} naive-DP comparisons, {_ms(start)} ms"
    )
    return 0


def cmd_bench(args):
    if args.dmin > args.dmax:
        raise UsageError("--dmin must not exceed --dmax")
    rows = bench_rows(
        range(args.dmin, args.dmax + 1), args.k, density=args.density, seed=args.seed or 0,
        threads=args.threads, m=args.m, max_d=args.max_d,
    )
    print("d,m,k,wall_ms,op_count")
    for d, m, k, wall, ops in rows:
        print(f"{d},{m},{k},{wall:.3f},{ops}")
    return 0


MICRO = [
    # (d, V, t, k, expected wit)
    (2, [1, 2, 3], 0, 3, [1, 0, 0, 6]),
    (2, [1, 2, 3], 1, 3, [0, 1, 2, 0]),
    (1, [0, 1], 0, 2, [1, 1, 0]),
]


def cmd_selftest(args):
    from .instance import Instance

    ok = True
    for d, vs, t, k, expected in MICRO:
        got = count_witnesses(Instance(d, vs, t, k)).wit
        line = "ok  " if got == expected else "FAIL"
        ok &= got == expected
        print(f"{line} d={d} V={vs} t={t} k={k}: wit={got}")
    seed = args.seed if args.seed is not None else 1
    result = oracle_check(random_instances(seed, 30, 5, 4))
    ok &= result.passed
    print(f"{'ok  ' if result.passed else 'FAIL'} random oracle check: {result.checked} instances")
    if result.mismatch is not None:
        print(result.mismatch.report())
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="witcount", description="Exact witness counting over F_2^d.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--plain", action="store_true", help="plain text instead of JSON")
    common.add_argument("--dedupe", action="store_true", help="drop duplicate vectors instead of failing")
    common.add_argument("--max-d", type=int, default=DEFAULT_MAX_D, help="dimension cap (default %(default)s)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for the transform stage")
    common.add_argument("--seed", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="Cand/Fail/Wit profile of an instance file")
    p.add_argument("file")
    p.add_argument("--cumulative", action="store_true", help="also report prefix sums of wit")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("candidates", parents=[common], help="candidate counts only")
    p.add_argument("file")
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("matchings", parents=[common], help="perfect matchings of a hypergraph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("oracle-check", parents=[common], help="fast path against both oracles")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", nargs="*", metavar="KEY=VAL", help="seed=, count=, dmax=, kmax=")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("bench", parents=[common], help="CSV of wall time and op count per d")
    p.add_argument("--dmin", type=int, default=16)
    p.add_argument("--dmax", type=int, default=20)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--density", type=float, default=0.5, help="m = density * 2^d")
    p.add_argument("--m", type=int, default=None, help="fixed m, overrides --density")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", parents=[common], help="micro-instances and a short random check")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, CapacityError, SizeGuardError) as exc:
        print(f"witcount: error: {exc}", file=sys.stderr)
        return 2
    except ExactnessError as exc:
        print(f"witcount: internal error (exactness check failed, please report): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
