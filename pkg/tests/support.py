"""Shared test helpers: independent oracles and tiny builders.

The oracles here deliberately avoid the library's own algorithms: front
peeling scans pairs and removes non-dominated layers one by one, and the
dominance check is written out long-hand.
"""

from __future__ import annotations

import itertools
import random

from greenflowshop.instance import Instance
from greenflowshop.objectives import evaluate


def naive_dominates(a, b) -> bool:
    better_somewhere = False
    for x, y in zip(a, b):
        if x > y:
            return False
        if x < y:
            better_somewhere = True
    return better_somewhere


def naive_front_peel(points) -> list[list[int]]:
    """Independent oracle: repeatedly peel the non-dominated layer."""
    remaining = list(range(len(points)))
    fronts = []
    while remaining:
        layer = [
            i for i in remaining
            if not any(naive_dominates(points[j], points[i]) for j in remaining if j != i)
        ]
        fronts.append(layer)
        remaining = [i for i in remaining if i not in layer]
    return fronts


def random_instance(rng: random.Random, n_jobs: int, n_machines: int) -> Instance:
    times = [[rng.randint(1, 99) for _ in range(n_machines)] for _ in range(n_jobs)]
    powers = [rng.randint(700, 1500) for _ in range(n_machines)]
    return Instance.from_matrix(times, powers)


def enumerate_front(instance: Instance, kappa: float = 1.0 / 60.0):
    """Exact Pareto front of a small instance by full enumeration."""
    objs = {}
    for perm in itertools.permutations(range(instance.n_jobs)):
        objs[perm] = evaluate(instance, perm, kappa)
    front = {}
    for perm, obj in objs.items():
        if not any(naive_dominates(other, obj) for other in objs.values()):
            front[perm] = obj
    return objs, front


# ---------------------------------------------------------------------------
# Golden data frozen from the reference study's printed tables.
# ---------------------------------------------------------------------------

# Orthogonal-array responses: one flowtime and one energy value per row.
FT_RESPONSES = [912, 913, 909, 921, 920, 915, 917, 917,
                916, 916, 916, 924, 912, 923, 909, 923]
EC_RESPONSES = [1290.8, 1207.8, 1145.8, 1207.8, 1207.8, 1207.5, 1242.2, 1290.4,
                1207.8, 1209.8, 1207.5, 1348.7, 1253.4, 1334.2, 1290.4, 1145.8]

# Response-table-of-means values published for the two studies.
FT_TABLE = {
    "gen": (913.8, 917.3, 918.0, 916.8),
    "pop": (915.0, 916.8, 912.8, 921.3),
    "crossover": (916.5, 916.5, 916.3, 916.5),
    "mutation": (919.0, 914.5, 917.0, 915.3),
}
FT_RANKS = {"gen": 3, "pop": 1, "crossover": 4, "mutation": 2}
EC_TABLE = {
    "gen": (1213, 1237, 1243, 1256),
    "pop": (1240, 1240, 1221, 1248),
    "crossover": (1213, 1264, 1245, 1228),
    "mutation": (1304, 1240, 1177, 1228),
}
EC_RANKS = {"gen": 3, "pop": 4, "crossover": 2, "mutation": 1}

# Published trade-off front of the 15x5 reference study.
REFERENCE_FRONT = [
    (909, 1348.7), (910, 1309.8), (913, 1290.4),
    (915, 1290.4), (916, 1207.8), (932, 1145.8),
]

# Benchmark summary rows: problem, ft1, ec1, ft2, ec2, pct_ft, pct_ec.
SUMMARY_ROWS = [
    ("Ta20x5", 14502, 13890, 14650, 12433, 1.02, 10.49),
    ("Ta20x10", 23757, 86507, 24212, 72129, 1.92, 16.62),
    ("Ta20x20", 34988, 293664, 35839, 278130, 2.43, 5.29),
    ("Ta50x5", 76690, 26364, 78417, 20153, 2.25, 23.56),
    ("Ta50x10", 100650, 96926, 104030, 71084, 3.36, 26.66),
    ("Ta50x20", 138280, 346350, 141150, 313390, 2.08, 9.52),
    ("Ta100x5", 297390, 24759, 299880, 23514, 0.84, 5.03),
    ("Ta100x10", 355213, 141423, 361950, 111160, 1.90, 21.40),
    ("Ta100x20", 448923, 573762, 458221, 504452, 2.07, 12.08),
]

# Per-dataset percentage pairs of the three benchmark tables, with the
# per-size averages they aggregate to.
GROUP_PCTS = {
    "Ta20x5": ([(10.47, 20.99), (9.55, 18.59), (1.63, 2.87), (3.39, 11.13),
                (0.62, 19.93), (3.01, 8.63), (7.13, 13.19), (9.56, 29.01),
                (4.98, 14.20), (1.02, 10.49)], (5.14, 14.90)),
    "Ta20x10": ([(1.86, 5.08), (4.98, 13.47), (3.98, 14.73), (2.08, 17.90),
                 (0.16, 6.71), (2.45, 6.82), (1.51, 7.49), (5.56, 12.50),
                 (2.83, 9.10), (1.92, 16.62)], (2.73, 11.04)),
    "Ta20x20": ([(6.15, 13.48), (1.91, 7.35), (3.60, 5.47), (4.60, 8.25),
                 (2.74, 10.04), (3.34, 9.91), (3.06, 9.60), (3.39, 4.35),
                 (2.66, 9.06), (2.43, 5.29)], (3.39, 8.28)),
    "Ta50x5": ([(6.83, 12.85), (3.17, 16.40), (6.40, 25.28), (4.94, 15.29),
                (3.84, 40.28), (5.15, 20.74), (7.88, 16.72), (3.72, 7.96),
                (3.54, 6.27), (2.25, 23.56)], (4.77, 18.54)),
    "Ta50x10": ([(3.78, 15.12), (4.95, 15.00), (2.86, 17.80), (3.37, 24.95),
                 (1.58, 22.35), (4.91, 14.61), (4.03, 9.16), (3.93, 18.18),
                 (1.76, 9.01), (3.36, 26.66)], (3.45, 17.28)),
    "Ta50x20": ([(5.32, 17.86), (2.59, 4.38), (0.43, 2.07), (2.55, 8.10),
                 (1.37, 3.22), (1.66, 10.22), (3.41, 10.49), (3.25, 10.76),
                 (0.07, 6.61), (2.08, 9.52)], (2.27, 8.32)),
    "Ta100x5": ([(9.16, 24.62), (1.43, 14.57), (11.66, 37.29), (6.26, 31.67),
                 (0.77, 43.73), (6.59, 29.76), (7.16, 27.78), (3.00, 37.39),
                 (1.84, 19.61), (0.84, 5.03)], (4.87, 27.14)),
    "Ta100x10": ([(1.93, 15.88), (5.51, 26.21), (0.40, 13.38), (3.51, 14.90),
                  (1.08, 7.07), (3.68, 13.27), (0.44, 7.48), (0.62, 6.76),
                  (4.70, 6.67), (1.90, 21.40)], (2.38, 13.30)),
    "Ta100x20": ([(3.27, 7.19), (2.51, 5.59), (1.44, 7.14), (3.06, 12.26),
                  (0.49, 2.92), (0.35, 2.84), (1.14, 15.17), (3.56, 19.77),
                  (2.23, 17.40), (2.07, 12.08)], (2.01, 10.24)),
}
OVERALL_AVERAGES = {
    ("Ta20x5", "Ta20x10", "Ta20x20"): (3.75, 11.41),
    ("Ta50x5", "Ta50x10", "Ta50x20"): (3.50, 14.71),
    ("Ta100x5", "Ta100x10", "Ta100x20"): (3.09, 16.89),
}
