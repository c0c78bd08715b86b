"""Schedule evaluation: completion times, total flowtime, standby times and
standby energy, plus an independent discrete-event simulation used to
cross-check the recurrence path.

All durations are integer minutes and summed exactly; energy converts the
accumulated power-minutes to Whr once, via a single multiplicative constant
(default 1/60, minutes to hours against the Whr-rated machine powers).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple

from .instance import Instance, check_permutation

__all__ = [
    "DEFAULT_KAPPA",
    "Objectives",
    "ScheduleTableau",
    "completion_times",
    "evaluate",
    "simulate_oracle",
    "standby_times",
    "total_energy",
    "total_flowtime",
]

# Minutes-to-hours conversion applied once to the power-minute total.
DEFAULT_KAPPA = 1.0 / 60.0


class Objectives(NamedTuple):
    flowtime: int
    energy: float


@dataclass
class ScheduleTableau:
    """Per-(sequence position, machine) completion and standby matrices."""

    completion: list[list[int]]
    standby: list[list[int]] | None = None


def completion_times(instance: Instance, perm) -> ScheduleTableau:
    """Completion-time matrix of `perm` on `instance`.

    Row i holds the sequence's i-th job; machine 1 chains job after job,
    later machines start each operation at the max of the machine becoming
    free and the job leaving the previous machine.
    """
    check_permutation(perm, instance.n_jobs)
    pt = instance.proc_time
    m = instance.n_machines
    rows: list[list[int]] = []
    prev: list[int] | None = None
    for job in perm:
        t = pt[job]
        row = [0] * m
        if prev is None:
            c = 0
            for j in range(m):
                c += t[j]
                row[j] = c
        else:
            c = prev[0] + t[0]
            row[0] = c
            for j in range(1, m):
                pj = prev[j]
                if pj > c:
                    c = pj
                c += t[j]
                row[j] = c
        rows.append(row)
        prev = row
    return ScheduleTableau(completion=rows)


def standby_times(tableau: ScheduleTableau) -> ScheduleTableau:
    """Fill the standby matrix: machine 1 never waits, the first job charges
    each later machine its full warm-up wait, and every following operation
    charges the gap between the machine coming free and the job arriving."""
    comp = tableau.completion
    n = len(comp)
    m = len(comp[0]) if n else 0
    standby: list[list[int]] = []
    first = [0] * m
    for j in range(1, m):
        first[j] = comp[0][j - 1]
    standby.append(first)
    for i in range(1, n):
        row = [0] * m
        ci = comp[i]
        cprev = comp[i - 1]
        for j in range(1, m):
            gap = ci[j - 1] - cprev[j]
            row[j] = gap if gap > 0 else 0
        standby.append(row)
    tableau.standby = standby
    return tableau


def total_flowtime(tableau: ScheduleTableau) -> int:
    """Sum of last-machine completion times over all sequence positions."""
    return sum(row[-1] for row in tableau.completion)


def total_energy(
    instance: Instance, tableau: ScheduleTableau, kappa: float = DEFAULT_KAPPA
) -> float:
    """Standby energy: per-machine standby minutes times the machine's fixed
    power, totalled and scaled by `kappa`."""
    if tableau.standby is None:
        raise ValueError("standby matrix not computed; call standby_times first")
    power_minutes = 0.0
    for j in range(1, instance.n_machines):
        minutes = 0
        for row in tableau.standby:
            minutes += row[j]
        power_minutes += instance.fixed_power[j] * minutes
    return power_minutes * kappa


def evaluate(instance: Instance, perm, kappa: float = DEFAULT_KAPPA) -> Objectives:
    """Both objectives of a permutation, via the recurrence tableau."""
    tableau = standby_times(completion_times(instance, perm))
    return Objectives(
        flowtime=total_flowtime(tableau),
        energy=total_energy(instance, tableau, kappa),
    )


def simulate_oracle(
    instance: Instance, perm, kappa: float = DEFAULT_KAPPA
) -> Objectives:
    """Event-driven re-computation of `evaluate`, sharing no code with it.

    Operations are released through a completion-event heap: operation
    (i, j) becomes ready once the machine finished sequence position i-1 and
    the job cleared machine j-1, and it starts the instant its last
    prerequisite completes.  Each machine logs the idle gap in front of
    every operation it runs, including the wait before its first one.
    """
    check_permutation(perm, instance.n_jobs)
    n, m = instance.n_jobs, instance.n_machines
    pt = instance.proc_time
    # remaining prerequisite count per operation (position, machine)
    need = [[2] * m for _ in range(n)]
    for j in range(m):
        need[0][j] -= 1
    for i in range(n):
        need[i][0] -= 1
    machine_prev_end = [0] * m
    standby_minutes = [0] * m
    flowtime = 0
    events: list[tuple[int, int, int]] = []

    def start(i: int, j: int, now: int) -> None:
        standby_minutes[j] += now - machine_prev_end[j]
        end = now + pt[perm[i]][j]
        machine_prev_end[j] = end
        heapq.heappush(events, (end, i, j))

    start(0, 0, 0)
    while events:
        now, i, j = heapq.heappop(events)
        if j == m - 1:
            flowtime += now
        for ni, nj in ((i + 1, j), (i, j + 1)):
            if ni < n and nj < m:
                need[ni][nj] -= 1
                if need[ni][nj] == 0:
                    start(ni, nj, now)
    power_minutes = 0.0
    for j in range(1, m):
        power_minutes += instance.fixed_power[j] * standby_minutes[j]
    return Objectives(flowtime=flowtime, energy=power_minutes * kappa)
