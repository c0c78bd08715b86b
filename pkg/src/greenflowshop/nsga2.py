"""Elitist bi-objective genetic search over job permutations.

One generation runs binary tournament selection, order crossover, swap
mutation, offspring evaluation, a merge of parents and offspring, a
budgeted round of descents over the merged pool (best fronts first, with
their trade-off discoveries folded back in), and elitist truncation back
to the population size.  All randomness flows from one root seed through
per-generation child streams, so switching the descent pass on or off
never perturbs the selection stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .instance import Instance
from .localsearch import vnd_explore
from .objectives import DEFAULT_KAPPA, Objectives, evaluate
from .pareto import (
    FrontSet,
    Individual,
    crowded_compare,
    dominates,
    rank_population,
)

__all__ = [
    "RunConfig",
    "elite_retention",
    "evolve",
    "init_population",
    "order_crossover",
    "swap_mutation",
    "tournament_select",
]

_STREAM_INIT, _STREAM_VARIATION, _STREAM_LOCAL = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    pop_size: int = 200
    generations: int = 50
    p_crossover: float = 0.6
    p_mutation: float = 0.05
    seed: int = 0
    ls_enabled: bool = True
    ls_max_iters: int = 15
    ls_front_cap: int = 200  # descent calls per generation, best fronts first

    def __post_init__(self):
        if self.pop_size < 2:
            raise ValueError("pop_size must be at least 2")
        if self.generations < 0:
            raise ValueError("generations must be non-negative")
        for name in ("p_crossover", "p_mutation"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be a probability")
        if self.ls_max_iters < 0 or self.ls_front_cap < 1:
            raise ValueError("invalid local search budget")


def _stream(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence(seed & 0xFFFFFFFFFFFFFFFF, spawn_key=key)
    )


def init_population(
    instance: Instance, config: RunConfig, kappa: float = DEFAULT_KAPPA
) -> list[Individual]:
    """Uniformly random evaluated permutations, one shuffle per member."""
    rng = _stream(config.seed, _STREAM_INIT)
    pop = []
    for _ in range(config.pop_size):
        perm = tuple(int(x) for x in rng.permutation(instance.n_jobs))
        pop.append(Individual(perm, evaluate(instance, perm, kappa)))
    return pop


def tournament_select(pop: list[Individual], rng: np.random.Generator) -> Individual:
    """Binary tournament: two distinct members, crowded-comparison winner
    (first draw kept on a full tie)."""
    i, j = rng.choice(len(pop), size=2, replace=False)
    a, b = pop[int(i)], pop[int(j)]
    return a if crowded_compare(a, b) <= 0 else b


def order_crossover(
    parent_a, parent_b, rng: np.random.Generator
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Order crossover: each child keeps a cut segment of one parent and is
    refilled with the other parent's jobs in their order, scanning
    cyclically from the second cut."""
    n = len(parent_a)
    if len(parent_b) != n:
        raise ValueError("parents must have equal length")
    lo, hi = sorted(int(x) for x in rng.choice(n + 1, size=2, replace=False))
    return (
        _ox_child(parent_a, parent_b, lo, hi),
        _ox_child(parent_b, parent_a, lo, hi),
    )


def _ox_child(keeper, donor, lo: int, hi: int) -> tuple[int, ...]:
    n = len(keeper)
    child = [None] * n
    child[lo:hi] = keeper[lo:hi]
    held = set(keeper[lo:hi])
    pos = hi % n
    for k in range(n):
        job = donor[(hi + k) % n]
        if job in held:
            continue
        child[pos] = job
        pos = (pos + 1) % n
    return tuple(child)


def swap_mutation(perm, rng: np.random.Generator) -> tuple[int, ...]:
    """Exchange two distinct random positions; identity below length 2."""
    n = len(perm)
    if n < 2:
        return tuple(perm)
    i = int(rng.integers(n))
    j = int(rng.integers(n - 1))
    if j >= i:
        j += 1
    out = list(perm)
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def _select_next(fronts: FrontSet, size: int) -> list[Individual]:
    """Fill front by front; the partially fitting front is truncated by
    descending crowding distance (stable on ties)."""
    out: list[Individual] = []
    for front in fronts:
        if len(out) + len(front) <= size:
            out.extend(front)
        else:
            ordered = sorted(front, key=lambda ind: -ind.crowding)
            out.extend(ordered[: size - len(out)])
        if len(out) == size:
            break
    return out


def elite_retention(
    parents: list[Individual], offspring: list[Individual]
) -> list[Individual]:
    """Merge both generations, re-sort the doubled pool, and keep the best
    members front by front until the parent population size is reached."""
    pool = parents + offspring
    fronts = rank_population(pool)
    return _select_next(fronts, len(parents))


def _make_offspring(
    instance: Instance,
    pop: list[Individual],
    config: RunConfig,
    rng: np.random.Generator,
    kappa: float,
) -> list[Individual]:
    perms: list[tuple[int, ...]] = []
    for _ in range((config.pop_size + 1) // 2):
        pa = tournament_select(pop, rng)
        pb = tournament_select(pop, rng)
        if rng.random() < config.p_crossover:
            ca, cb = order_crossover(pa.perm, pb.perm, rng)
        else:
            ca, cb = pa.perm, pb.perm
        perms.append(ca)
        perms.append(cb)
    del perms[config.pop_size :]  # odd sizes drop the spare child
    offspring = []
    for perm in perms:
        if rng.random() < config.p_mutation:
            perm = swap_mutation(perm, rng)
        offspring.append(Individual(perm, evaluate(instance, perm, kappa)))
    return offspring


def _apply_local_search(
    pool: list[Individual],
    fronts: FrontSet,
    instance: Instance,
    config: RunConfig,
    rng: np.random.Generator,
    kappa: float,
) -> None:
    """Run up to `ls_front_cap` descents, rank-1 members first (largest
    crowding first within each front), spilling into deeper fronts while
    budget remains.  Each strict improvement replaces its start in the
    pool; every walk's non-dominated discoveries join the pool as extra
    members, so trade-off points met during descent survive into the
    elitist selection.  Lower-rank starts act as perturbed restarts around
    the front, which keeps the search moving once the front's own
    neighbourhoods are exhausted.
    """
    candidates: list[Individual] = []
    for front in fronts:
        room = config.ls_front_cap - len(candidates)
        if room <= 0:
            break
        candidates.extend(sorted(front, key=lambda ind: -ind.crowding)[:room])
    slot = {id(ind): k for k, ind in enumerate(pool)}
    harvested: list[Individual] = []
    for ind in candidates:
        improved, discoveries = vnd_explore(
            ind, instance, config.ls_max_iters, rng, kappa
        )
        if dominates(improved.obj, ind.obj):
            pool[slot[id(ind)]] = improved
        harvested.extend(
            found for found in discoveries
            if found.obj != improved.obj and found.obj != ind.obj
        )
    pool.extend(harvested)


def evolve(
    instance: Instance,
    config: RunConfig,
    kappa: float = DEFAULT_KAPPA,
    on_generation: Callable[[int, list[Individual], list[Individual]], None] | None = None,
) -> list[Individual]:
    """Run the full generational loop and return the final best front,
    deduplicated by objective pair and sorted by (flowtime, energy).

    `on_generation(gen, merged_pool, population)` is invoked after each
    generation's survivor selection, for tracing and tests.
    """
    pop = init_population(instance, config, kappa)
    rank_population(pop)
    for gen in range(1, config.generations + 1):
        var_rng = _stream(config.seed, _STREAM_VARIATION, gen)
        offspring = _make_offspring(instance, pop, config, var_rng, kappa)
        merged = pop + offspring
        fronts = rank_population(merged)
        if config.ls_enabled and config.ls_max_iters > 0:
            ls_rng = _stream(config.seed, _STREAM_LOCAL, gen)
            _apply_local_search(merged, fronts, instance, config, ls_rng, kappa)
            fronts = rank_population(merged)
        pop = _select_next(fronts, config.pop_size)
        rank_population(pop)
        if on_generation is not None:
            on_generation(gen, merged, pop)
    front = [ind for ind in pop if ind.rank == 1]
    seen: set[Objectives] = set()
    unique = []
    for ind in sorted(front, key=lambda ind: (ind.obj.flowtime, ind.obj.energy)):
        if ind.obj not in seen:
            seen.add(ind.obj)
            snapshot = ind.copy()
            snapshot.rank = ind.rank
            snapshot.crowding = ind.crowding
            unique.append(snapshot)
    return unique
