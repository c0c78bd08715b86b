"""Command line entry point.

Subcommands: `generate` (random instance synthesis), `solve` (one
configured run, front to CSV/JSON), `tune` (orthogonal-array campaign,
response tables to CSV), `bench` (repeated runs over benchmark files,
records to CSV) and `report` (re-aggregate a stored record file).

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 contract violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness, tuning
from .instance import (
    Instance,
    InstanceFormatError,
    count_taillard_blocks,
    default_powers,
    format_instance,
    generate_instance,
    load_table3,
    parse_instance,
    parse_taillard,
    save_instance,
)
from .nsga2 import RunConfig, evolve
from .objectives import DEFAULT_KAPPA

__all__ = ["cli", "main"]


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pop", type=int, default=200, help="population size")
    parser.add_argument("--gen", type=int, default=50, help="generation count")
    parser.add_argument("--pc", type=float, default=0.6, help="crossover probability")
    parser.add_argument("--pm", type=float, default=0.05, help="mutation probability")
    parser.add_argument("--seed", type=int, default=0, help="root random seed")
    parser.add_argument("--ls", choices=("on", "off"), default="on",
                        help="descent pass on rank-1 solutions")
    parser.add_argument("--runs", type=int, default=10,
                        help="repeated runs per benchmark instance")
    parser.add_argument("--kappa", type=float, default=DEFAULT_KAPPA,
                        help="standby minutes to energy conversion factor")
    parser.add_argument("--out", type=str, default=None, help="output path")
    parser.add_argument("--powers", type=str, default="table9",
                        help="machine powers: 'table9' or a file of numbers")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenflowshop",
        description="Bi-objective flowshop scheduling: flowtime vs. standby energy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="synthesize a random instance")
    p_gen.add_argument("--jobs", type=int, required=True)
    p_gen.add_argument("--machines", type=int, required=True)
    _common_flags(p_gen)

    p_solve = sub.add_parser("solve", help="one run, emit the front")
    p_solve.add_argument("--instance", type=str, required=True,
                         help="'table3' or an instance file path")
    p_solve.add_argument("--index", type=int, default=1,
                         help="block index inside a multi-instance file")
    p_solve.add_argument("--json", type=str, default=None,
                         help="also mirror the front to this JSON path")
    _common_flags(p_solve)

    p_tune = sub.add_parser("tune", help="orthogonal-array parameter campaign")
    p_tune.add_argument("--instance", type=str, default="table3")
    p_tune.add_argument("--index", type=int, default=1)
    _common_flags(p_tune)

    p_bench = sub.add_parser("bench", help="repeated runs over benchmark files")
    p_bench.add_argument("instances", nargs="*",
                         help="instance files (native or Taillard, all blocks)")
    p_bench.add_argument("--json", type=str, default=None)
    _common_flags(p_bench)

    p_report = sub.add_parser("report", help="re-aggregate a stored record CSV")
    p_report.add_argument("--records", type=str, required=True, dest="records")
    _common_flags(p_report)

    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        pop_size=args.pop,
        generations=args.gen,
        p_crossover=args.pc,
        p_mutation=args.pm,
        seed=args.seed,
        ls_enabled=args.ls == "on",
    )


def _resolve_powers(spec: str, n_machines: int):
    if spec == "table9":
        return default_powers(n_machines)
    values = [float(tok) for tok in Path(spec).read_text(encoding="utf-8").split()]
    if len(values) < n_machines:
        raise ValueError(
            f"power file {spec} has {len(values)} values, need {n_machines}"
        )
    return tuple(values[:n_machines])


def _load_any_instance(path: str, index: int, powers_spec: str) -> Instance:
    """Native format first; anything else is treated as a Taillard file whose
    chosen block gets powers from `powers_spec`."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse_instance(text)
    except InstanceFormatError:
        block = parse_taillard(text, index)
        return block.to_instance(_resolve_powers(powers_spec, block.n_machines))


def _resolve_instance(args) -> Instance:
    if args.instance == "table3":
        return load_table3()
    return _load_any_instance(args.instance, args.index, args.powers)


def _cmd_generate(args) -> int:
    instance = generate_instance(args.jobs, args.machines, args.seed)
    if args.out:
        save_instance(instance, args.out)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(format_instance(instance))
    return 0


def _cmd_solve(args) -> int:
    instance = _resolve_instance(args)
    front = evolve(instance, _config(args), kappa=args.kappa)
    if args.out:
        harness.write_front_csv(args.out, front)
        print(f"wrote {args.out} ({len(front)} front points)")
    else:
        print("sequence,flowtime,energy_whr")
        for ind in front:
            seq = "-".join(str(j + 1) for j in ind.perm)
            print(f"{seq},{ind.obj.flowtime},{ind.obj.energy!r}")
    if args.json:
        harness.write_front_json(args.json, front)
    return 0


def _cmd_tune(args) -> int:
    instance = _resolve_instance(args)
    design = tuning.build_l16()
    base = _config(args)
    prefix = args.out or "tuning"
    tables = {}
    for response in ("flowtime", "energy"):
        responses = tuning.run_design(
            design, instance, args.seed, response, base_config=base, kappa=args.kappa
        )
        table = tuning.response_table(design, responses)
        tables[response] = table
        rows_path = f"{prefix}_{response}_responses.csv"
        with open(rows_path, "w", encoding="utf-8") as fh:
            fh.write("gen,pop,crossover,mutation,response\n")
            for row, value in zip(design.rows, responses):
                fh.write(f"{row.gen},{row.pop},{row.crossover},{row.mutation},{value!r}\n")
        table_path = f"{prefix}_{response}_table.csv"
        with open(table_path, "w", encoding="utf-8") as fh:
            fh.write(tuning.response_table_csv(table))
        print(f"wrote {rows_path} and {table_path}")
    picked = tuning.pick_best_params(tables["flowtime"], tables["energy"])
    print("selected parameters:", picked)
    return 0


def _bench_tasks(paths, powers_spec: str) -> list[harness.BenchTask]:
    tasks = []
    for path in paths:
        text = Path(path).read_text(encoding="utf-8")
        label = Path(path).stem
        try:
            instance = parse_instance(text)
            tasks.append(harness.BenchTask(label, 1, instance))
            continue
        except InstanceFormatError:
            pass
        for k in range(1, count_taillard_blocks(text) + 1):
            block = parse_taillard(text, k)
            powers = _resolve_powers(powers_spec, block.n_machines)
            tasks.append(harness.BenchTask(label, k, block.to_instance(powers)))
    return tasks


def _cmd_bench(args) -> int:
    if not args.instances:
        print("bench: at least one instance file is required", file=sys.stderr)
        return 1
    tasks = _bench_tasks(args.instances, args.powers)
    config = _config(args)

    def progress(task, done, total):
        print(f"{task.problem} #{task.dataset}: run {done}/{total}", file=sys.stderr)

    records = harness.run_benchmark(
        tasks, config, args.runs, kappa=args.kappa, on_progress=progress
    )
    out = args.out or "bench.csv"
    harness.write_bench_csv(out, records)
    if args.json:
        harness.write_bench_json(args.json, records)
    for label, pct_ft, pct_ec in harness.aggregate_records(records):
        print(f"{label}: avg pct_ft {pct_ft:.2f}, avg pct_ec {pct_ec:.2f}")
    print(f"wrote {out} ({len(records)} records)")
    return 0


def _cmd_report(args) -> int:
    records = harness.read_bench_csv(args.records)
    if not records:
        raise ValueError(f"no records in {args.records}")
    aggregates = harness.aggregate_records(records)
    if args.out:
        harness.write_aggregates_csv(args.out, aggregates)
        print(f"wrote {args.out}")
    else:
        print("problem,avg_pct_ft,avg_pct_ec")
        for label, pct_ft, pct_ec in aggregates:
            print(f"{label},{pct_ft:.2f},{pct_ec:.2f}")
    return 0


_HANDLERS = {
    "generate": _cmd_generate,
    "solve": _cmd_solve,
    "tune": _cmd_tune,
    "bench": _cmd_bench,
    "report": _cmd_report,
}


def cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage problems
        return 0 if exc.code in (0, None) else 1
    try:
        return _HANDLERS[args.command](args)
    except OSError as exc:
        print(f"greenflowshop: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"greenflowshop: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
