"""Benchmark harness: repeated solver runs, merged fronts, extreme-point
extraction, percent-difference records and CSV/JSON emission.

A benchmark record carries both ends of an instance's merged front: the
flowtime-minimal point (FT1, EC1) and the energy-minimal point (FT2, EC2),
plus the percentage the flowtime grows and the energy drops when trading
one end for the other.  Reports round percentages to two decimals; front
files print sequences as dash-separated 1-based job ids.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, replace

import numpy as np

from .instance import Instance
from .nsga2 import RunConfig, evolve
from .objectives import DEFAULT_KAPPA, Objectives, evaluate
from .pareto import Individual, fast_nondominated_sort

__all__ = [
    "BenchRecord",
    "BenchTask",
    "aggregate_records",
    "average_pcts",
    "extreme_points",
    "merge_fronts",
    "percent_diffs",
    "read_bench_csv",
    "read_front_csv",
    "run_benchmark",
    "write_bench_csv",
    "write_bench_json",
    "write_front_csv",
    "write_front_json",
    "write_aggregates_csv",
]


@dataclass(frozen=True)
class BenchTask:
    problem: str  # e.g. "Ta20x5"
    dataset: int  # 1-based index within the problem size
    instance: Instance


@dataclass(frozen=True)
class BenchRecord:
    problem: str
    dataset: int
    ft1: int
    ec1: float
    ft2: int
    ec2: float
    pct_ft: float
    pct_ec: float


def extreme_points(front: list[Individual]) -> tuple[Individual, Individual]:
    """Both ends of a front: lexicographic minimum by (flowtime, energy) and
    by (energy, flowtime)."""
    if not front:
        raise ValueError("empty front has no extreme points")
    ft_best = min(front, key=lambda ind: (ind.obj.flowtime, ind.obj.energy))
    ec_best = min(front, key=lambda ind: (ind.obj.energy, ind.obj.flowtime))
    return ft_best, ec_best


def percent_diffs(ft1: float, ec1: float, ft2: float, ec2: float) -> tuple[float, float]:
    """Percent flowtime growth and energy drop between the two extremes."""
    if ft1 <= 0 or ec1 <= 0:
        raise ValueError("reference flowtime and energy must be positive")
    return 100.0 * (ft2 - ft1) / ft1, 100.0 * (ec1 - ec2) / ec1


def merge_fronts(fronts) -> list[Individual]:
    """Union several fronts, keep the non-dominated layer, drop duplicate
    objective pairs, and order by (flowtime, energy)."""
    pool = [ind.copy() for front in fronts for ind in front]
    if not pool:
        return []
    top = fast_nondominated_sort(pool)[0]
    seen: set[Objectives] = set()
    merged = []
    for ind in sorted(top, key=lambda ind: (ind.obj.flowtime, ind.obj.energy)):
        if ind.obj not in seen:
            seen.add(ind.obj)
            merged.append(ind)
    return merged


def make_record(problem: str, dataset: int, front: list[Individual]) -> BenchRecord:
    ft_best, ec_best = extreme_points(front)
    pct_ft, pct_ec = percent_diffs(
        ft_best.obj.flowtime, ft_best.obj.energy,
        ec_best.obj.flowtime, ec_best.obj.energy,
    )
    return BenchRecord(
        problem=problem,
        dataset=dataset,
        ft1=ft_best.obj.flowtime,
        ec1=ft_best.obj.energy,
        ft2=ec_best.obj.flowtime,
        ec2=ec_best.obj.energy,
        pct_ft=pct_ft,
        pct_ec=pct_ec,
    )


def run_benchmark(
    tasks: list[BenchTask],
    config: RunConfig,
    repeats: int,
    kappa: float = DEFAULT_KAPPA,
    on_progress=None,
) -> list[BenchRecord]:
    """Solve every task `repeats` times, merge each task's fronts into one
    non-dominated set, and record its extreme points.

    Run seeds derive from the config seed and the task/repeat indices, so a
    rerun with the same root seed reproduces the report bit for bit.
    """
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    records = []
    for t, task in enumerate(tasks):
        fronts = []
        for r in range(repeats):
            run_seed = int(
                np.random.SeedSequence(
                    config.seed & 0xFFFFFFFFFFFFFFFF, spawn_key=(4, t, r)
                ).generate_state(1)[0]
            )
            fronts.append(evolve(task.instance, replace(config, seed=run_seed), kappa))
            if on_progress is not None:
                on_progress(task, r + 1, repeats)
        records.append(make_record(task.problem, task.dataset, merge_fronts(fronts)))
    return records


def average_pcts(pairs) -> tuple[float, float]:
    """Mean (pct_ft, pct_ec) over an iterable of percentage pairs."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("nothing to average")
    return (
        sum(p[0] for p in pairs) / len(pairs),
        sum(p[1] for p in pairs) / len(pairs),
    )


def aggregate_records(
    records: list[BenchRecord],
) -> list[tuple[str, float, float]]:
    """Per-problem average percentage rows plus one overall row, in first-seen
    problem order; overall averages the per-problem averages."""
    order: list[str] = []
    grouped: dict[str, list[tuple[float, float]]] = {}
    for rec in records:
        if rec.problem not in grouped:
            order.append(rec.problem)
            grouped[rec.problem] = []
        grouped[rec.problem].append((rec.pct_ft, rec.pct_ec))
    out = [(label, *average_pcts(grouped[label])) for label in order]
    if out:
        out.append(("overall", *average_pcts([(ft, ec) for _, ft, ec in out])))
    return out


# ---------------------------------------------------------------------------
# File emission; CSV is the canonical format, JSON mirrors it one-to-one.
# ---------------------------------------------------------------------------


def _sequence_str(perm) -> str:
    return "-".join(str(job + 1) for job in perm)


def _parse_sequence(text: str) -> tuple[int, ...]:
    return tuple(int(tok) - 1 for tok in text.split("-"))


def write_front_csv(path, front: list[Individual]) -> None:
    """`sequence,flowtime,energy_whr` rows; energy uses the shortest decimal
    that parses back to the same float, so rows re-evaluate exactly."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["sequence", "flowtime", "energy_whr"])
        for ind in front:
            writer.writerow([_sequence_str(ind.perm), ind.obj.flowtime, repr(ind.obj.energy)])


def read_front_csv(path) -> list[tuple[tuple[int, ...], int, float]]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            (_parse_sequence(row["sequence"]), int(row["flowtime"]), float(row["energy_whr"]))
            for row in reader
        ]


def write_front_json(path, front: list[Individual]) -> None:
    payload = [
        {
            "sequence": [job + 1 for job in ind.perm],
            "flowtime": ind.obj.flowtime,
            "energy_whr": ind.obj.energy,
        }
        for ind in front
    ]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


_BENCH_FIELDS = ["problem", "dataset", "ft1", "ec1", "ft2", "ec2", "pct_ft", "pct_ec"]


def write_bench_csv(path, records: list[BenchRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_BENCH_FIELDS)
        for rec in records:
            writer.writerow([
                rec.problem, rec.dataset, rec.ft1, repr(rec.ec1), rec.ft2,
                repr(rec.ec2), f"{rec.pct_ft:.2f}", f"{rec.pct_ec:.2f}",
            ])


def read_bench_csv(path) -> list[BenchRecord]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            BenchRecord(
                problem=row["problem"],
                dataset=int(row["dataset"]),
                ft1=int(row["ft1"]),
                ec1=float(row["ec1"]),
                ft2=int(row["ft2"]),
                ec2=float(row["ec2"]),
                pct_ft=float(row["pct_ft"]),
                pct_ec=float(row["pct_ec"]),
            )
            for row in reader
        ]


def write_bench_json(path, records: list[BenchRecord]) -> None:
    payload = [
        {
            "problem": rec.problem,
            "dataset": rec.dataset,
            "ft1": rec.ft1,
            "ec1": rec.ec1,
            "ft2": rec.ft2,
            "ec2": rec.ec2,
            "pct_ft": round(rec.pct_ft, 2),
            "pct_ec": round(rec.pct_ec, 2),
        }
        for rec in records
    ]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def write_aggregates_csv(path, aggregates) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["problem", "avg_pct_ft", "avg_pct_ec"])
        for label, pct_ft, pct_ec in aggregates:
            writer.writerow([label, f"{pct_ft:.2f}", f"{pct_ec:.2f}"])


def verify_front_csv(path, instance: Instance, kappa: float = DEFAULT_KAPPA) -> bool:
    """Re-evaluate each printed sequence; exact flowtime match and energy
    within 1e-6 relative."""
    for perm, flowtime, energy in read_front_csv(path):
        obj = evaluate(instance, perm, kappa)
        if obj.flowtime != flowtime:
            return False
        scale = max(abs(energy), 1.0)
        if abs(obj.energy - energy) > 1e-6 * scale:
            return False
    return True
