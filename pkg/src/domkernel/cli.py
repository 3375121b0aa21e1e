"""Command-line front end: gen, reduce, solve, verify, bench."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from dataclasses import asdict

from . import verify as verify_mod
from .bench import BenchConfig, aggregate, format_table, make_record, run_bench
from .io import ParseError, file_numbering, read_graph, write_graph
from .plangen import GenSpec, generate, sample_specs
from .reduction import Mode, reduce
from .solver import BRUTE_FORCE_CAP, branch_and_reduce

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_IO = 4


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes:
        raise argparse.ArgumentTypeError("size list is empty")
    return sizes


def _mode(args) -> Mode:
    if args.mode == "gadget":
        if args.extra_rules:
            raise CliError("--extra-rules requires --mode annotated", EXIT_USAGE)
        return Mode.gadget()
    return Mode.annotated_mode(extra_rules=args.extra_rules)


def _load(path: str):
    try:
        if path == "-":
            return read_graph(sys.stdin)
        return read_graph(path)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}", EXIT_IO) from exc


@contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}", EXIT_IO) from exc
    with fh:
        yield fh


def _dump_json(obj, path: str | None) -> None:
    with _output(path) as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.n, args.m if args.m is not None else 3 * args.n - 6, args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    inst = generate(spec)
    with _output(args.out) as fh:
        fh.write(f"c planar n={spec.n} m={spec.m} seed={spec.seed}\n")
        write_graph(inst.graph, fh)
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _load(args.input)
    mode = _mode(args)
    result = reduce(g, mode)
    with _output(args.out) as fh:
        write_graph(result.graph, fh)
    record = make_record(args.input, g, result, mode, with_gamma=args.gamma)
    stats = record.to_dict()
    stats["mode"] = mode.label
    stats["events"] = [e.to_dict() for e in result.events]
    if args.stats:
        _dump_json(stats, args.stats)
    if args.format == "json" and args.out not in (None, "-"):
        _dump_json(stats, None)
    elif args.out not in (None, "-"):
        print(
            f"{record.n_before} -> {record.n_after} vertices, "
            f"{record.m_before} -> {record.m_after} edges, "
            f"{len(result.events)} events, {len(result.forced)} forced"
        )
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load(args.input)
    mode = _mode(args)
    result = branch_and_reduce(g, mode)
    num = file_numbering(g)
    witness = sorted(num[v] for v in result.witness)
    if args.format == "json":
        _dump_json(
            {"gamma": result.gamma, "witness": witness, "nodes_explored": result.nodes_explored},
            args.out,
        )
    else:
        with _output(args.out) as fh:
            fh.write(f"gamma {result.gamma}\n")
            fh.write(" ".join(map(str, witness)) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    mode = _mode(args)
    if args.input:
        g = _load(args.input)
        if g.num_vertices > BRUTE_FORCE_CAP:
            raise CliError(
                f"{args.input}: {g.num_vertices} vertices exceeds the exhaustive oracle cap",
                EXIT_USAGE,
            )
        cases = [verify_mod.check_instance("input", g, mode, args.planar, args.dump_dir)]
    else:
        cases = verify_mod.run_trials(args.trials, args.seed, mode, args.dump_dir, args.max_n)
    failed = [c for c in cases if not c.ok]
    if args.format == "json":
        _dump_json(
            {"mode": mode.label, "passed": len(cases) - len(failed), "failed": len(failed),
             "cases": [asdict(c) for c in cases]},
            args.out,
        )
    else:
        with _output(args.out) as fh:
            for c in cases:
                status = "PASS" if c.ok else "FAIL"
                fh.write(
                    f"{status} {c.instance_id} n={c.n} m={c.m} gamma={c.gamma} "
                    f"forced+kernel={c.forced}+{c.kernel_gamma} "
                    f"kernel={c.kernel_size}<=335*{c.gamma}:{c.bound_ok}"
                    + (f" dumped={c.dump_path}" if c.dump_path else "")
                    + "\n"
                )
            fh.write(f"{len(cases) - len(failed)}/{len(cases)} passed\n")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_bench(args) -> int:
    mode = _mode(args)
    config = BenchConfig(tuple(args.sizes), args.count, args.seed, mode, args.jobs, not args.no_timing)
    specs = sample_specs(config.sizes, config.count, config.seed)
    records = run_bench(config, specs)
    rows = aggregate(records, specs)
    if args.format == "json":
        _dump_json(
            {
                "config": {"sizes": list(config.sizes), "count": config.count,
                           "seed": config.seed, "mode": mode.label},
                "rows": [asdict(r) for r in rows],
                "instances": [r.to_dict() for r in records],
            },
            args.out,
        )
    else:
        with _output(args.out) as fh:
            fh.write(f"mode={mode.label} seed={config.seed} count={config.count}\n")
            fh.write(format_table(rows) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domkernel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mode_default="gadget"):
        p.add_argument("--seed", type=_u64, default=0)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--mode", choices=("gadget", "annotated"), default=mode_default)
        p.add_argument("--extra-rules", action="store_true")

    p = sub.add_parser("gen", help="generate a random planar graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="edge count (default 3n-6)")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="reduce a graph file to its kernel")
    p.add_argument("input")
    common(p)
    p.add_argument("--stats", default=None, help="write stats JSON here")
    p.add_argument("--gamma", action="store_true", help="compute gamma when the kernel is small")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="exact domination number via branch and reduce")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check gamma preservation against the exhaustive oracle")
    p.add_argument("input", nargs="?")
    common(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--planar", action="store_true", help="treat the input file as planar")
    p.add_argument("--dump-dir", default=".", help="where failing instances are written")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="reduction benchmark on random planar graphs")
    common(p, mode_default="annotated")
    p.add_argument("--sizes", type=_sizes, default=[100])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="null out timings for byte-stable JSON")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"domkernel: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
