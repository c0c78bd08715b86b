#!/usr/bin/env python3
"""Benchmark campaign over the built-in 20x5 benchmark set: 10 instances,
each solved `--runs` times, fronts merged per instance, extreme points and
percentage trade-offs reported.  Expect ~15 minutes at the defaults."""

import argparse
import time
from pathlib import Path

from greenflowshop.harness import (
    BenchTask,
    aggregate_records,
    run_benchmark,
    write_aggregates_csv,
    write_bench_csv,
    write_bench_json,
)
from greenflowshop.instance import taillard_instance
from greenflowshop.nsga2 import RunConfig


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--runs", type=int, default=10)
    parser.add_argument("--instances", type=int, default=10,
                        help="how many of the ten 20x5 instances to solve")
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    args = parser.parse_args()

    tasks = [
        BenchTask("Ta20x5", k, taillard_instance(20, 5, k))
        for k in range(1, args.instances + 1)
    ]
    config = RunConfig(seed=args.seed)

    t0 = time.perf_counter()

    def progress(task, done, total):
        print(f"  {task.problem} #{task.dataset}: run {done}/{total} "
              f"({time.perf_counter() - t0:.0f}s elapsed)")

    records = run_benchmark(tasks, config, args.runs, on_progress=progress)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = args.out_dir / "ta20x5_records.csv"
    write_bench_csv(csv_path, records)
    write_bench_json(csv_path.with_suffix(".json"), records)
    agg_path = args.out_dir / "ta20x5_averages.csv"
    aggregates = aggregate_records(records)
    write_aggregates_csv(agg_path, aggregates)

    print(f"\n{'dataset':>7}  {'ft1':>7}  {'ec1':>9}  {'ft2':>7}  {'ec2':>9}  "
          f"{'pct_ft':>6}  {'pct_ec':>6}")
    for rec in records:
        print(f"{rec.dataset:>7}  {rec.ft1:>7}  {rec.ec1:>9.1f}  {rec.ft2:>7}  "
              f"{rec.ec2:>9.1f}  {rec.pct_ft:>6.2f}  {rec.pct_ec:>6.2f}")
    for label, pct_ft, pct_ec in aggregates:
        print(f"{label}: average pct_ft {pct_ft:.2f}, pct_ec {pct_ec:.2f}")
    print(f"wrote {csv_path}, {csv_path.with_suffix('.json')} and {agg_path}")


if __name__ == "__main__":
    main()
