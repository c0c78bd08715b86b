import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenflowshop.instance import Instance
from greenflowshop.objectives import (
    DEFAULT_KAPPA,
    completion_times,
    evaluate,
    simulate_oracle,
    standby_times,
    total_energy,
    total_flowtime,
)
from support import random_instance

TOY = Instance.from_matrix([[3, 4], [2, 5]], [600, 1200])


class TestWorkedExample:
    """2 jobs x 2 machines, powers (600, 1200): values derived by hand from
    the completion/standby recurrences and confirmed by the event simulation."""

    def test_completion_job1_first(self):
        tab = completion_times(TOY, (0, 1))
        assert tab.completion == [[3, 7], [5, 12]]

    def test_completion_job2_first(self):
        tab = completion_times(TOY, (1, 0))
        assert tab.completion == [[2, 7], [5, 11]]

    def test_standby_job1_first(self):
        tab = standby_times(completion_times(TOY, (0, 1)))
        assert tab.standby == [[0, 3], [0, 0]]

    def test_standby_job2_first(self):
        tab = standby_times(completion_times(TOY, (1, 0)))
        assert tab.standby == [[0, 2], [0, 0]]

    def test_flowtimes(self):
        assert total_flowtime(completion_times(TOY, (0, 1))) == 19
        assert total_flowtime(completion_times(TOY, (1, 0))) == 18

    def test_energies_exact(self):
        tab = standby_times(completion_times(TOY, (0, 1)))
        assert total_energy(TOY, tab) == 60.0
        tab = standby_times(completion_times(TOY, (1, 0)))
        assert total_energy(TOY, tab) == 40.0

    def test_evaluate_pairs_exact(self):
        assert evaluate(TOY, (0, 1)) == (19, 60.0)
        assert evaluate(TOY, (1, 0)) == (18, 40.0)

    def test_oracle_agrees(self):
        assert simulate_oracle(TOY, (0, 1)) == (19, 60.0)
        assert simulate_oracle(TOY, (1, 0)) == (18, 40.0)


class TestBaseCases:
    def test_single_cell(self):
        inst = Instance.from_matrix([[5]], [900])
        assert completion_times(inst, (0,)).completion == [[5]]
        assert evaluate(inst, (0,)) == (5, 0.0)
        assert simulate_oracle(inst, (0,)) == (5, 0.0)

    @given(st.lists(st.integers(1, 50), min_size=3, max_size=3))
    def test_single_machine_telescopes(self, times):
        a, b, c = times
        inst = Instance.from_matrix([[a], [b], [c]], [1000])
        obj = evaluate(inst, (0, 1, 2))
        assert obj.flowtime == 3 * a + 2 * b + c
        assert obj.energy == 0.0

    def test_machine_one_never_waits(self):
        tab = standby_times(completion_times(TOY, (0, 1)))
        assert all(row[0] == 0 for row in tab.standby)

    def test_energy_requires_standby(self):
        with pytest.raises(ValueError):
            total_energy(TOY, completion_times(TOY, (0, 1)))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            completion_times(TOY, (0, 1, 2))
        with pytest.raises(ValueError):
            evaluate(TOY, (0, 0))


def _random_cases():
    rng = random.Random(2024)
    for _ in range(150):
        n = rng.randint(1, 6)
        m = rng.randint(1, 4)
        inst = random_instance(rng, n, m)
        perm = tuple(rng.sample(range(n), n))
        yield inst, perm


class TestInvariants:
    def test_completion_monotone_and_bounded_below(self):
        for inst, perm in _random_cases():
            comp = completion_times(inst, perm).completion
            for i, row in enumerate(comp):
                for j, c in enumerate(row):
                    assert c >= inst.proc_time[perm[i]][j]
                    if j > 0:
                        assert row[j] >= row[j - 1]
                    if i > 0:
                        assert comp[i][j] >= comp[i - 1][j]

    def test_flowtime_bounds(self):
        for inst, perm in _random_cases():
            tab = completion_times(inst, perm)
            flow = total_flowtime(tab)
            makespan = tab.completion[-1][-1]
            assert flow >= makespan
            assert flow >= sum(inst.proc_time[j][-1] for j in perm)

    def test_oracle_equivalence(self):
        for inst, perm in _random_cases():
            a = evaluate(inst, perm)
            b = simulate_oracle(inst, perm)
            assert a.flowtime == b.flowtime
            assert a.energy == pytest.approx(b.energy, rel=1e-9)

    def test_relabeling_symmetry(self):
        # renaming jobs (and permuting matrix rows to match) changes nothing
        rng = random.Random(5)
        for _ in range(40):
            n, m = rng.randint(2, 6), rng.randint(1, 4)
            inst = random_instance(rng, n, m)
            relabel = list(range(n))
            rng.shuffle(relabel)  # relabel[old] = new
            rows = [None] * n
            for old, new in enumerate(relabel):
                rows[new] = inst.proc_time[old]
            relabeled = Instance.from_matrix(rows, inst.fixed_power)
            perm = tuple(rng.sample(range(n), n))
            mapped = tuple(relabel[j] for j in perm)
            assert evaluate(inst, perm) == evaluate(relabeled, mapped)

    def test_power_scaling_scales_energy_only(self):
        rng = random.Random(6)
        for _ in range(40):
            n, m = rng.randint(2, 6), rng.randint(2, 4)
            inst = random_instance(rng, n, m)
            doubled = Instance.from_matrix(
                inst.proc_time, [2 * p for p in inst.fixed_power]
            )
            perm = tuple(rng.sample(range(n), n))
            base = evaluate(inst, perm)
            scaled = evaluate(doubled, perm)
            assert scaled.flowtime == base.flowtime
            assert scaled.energy == 2 * base.energy

    def test_kappa_scales_linearly(self):
        obj_1 = evaluate(TOY, (0, 1), kappa=1.0)
        assert obj_1.energy == 3600.0
        assert evaluate(TOY, (0, 1), kappa=0.5).energy == 1800.0
        assert DEFAULT_KAPPA == pytest.approx(1 / 60)
