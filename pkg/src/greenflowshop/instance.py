"""Problem data model and instance I/O.

An instance is a job-major processing-time matrix (integer minutes) plus one
fixed standby power rating per machine (Whr as printed on machine tables).
Readers cover the classic Taillard flowshop text format (machine-major,
read-only) and a small native format that also carries the power column.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Instance",
    "TaillardBlock",
    "InstanceFormatError",
    "TABLE9_POWERS",
    "TAILLARD_TIME_SEEDS",
    "check_permutation",
    "default_powers",
    "generate_instance",
    "generate_taillard_times",
    "load_instance",
    "load_table3",
    "parse_instance",
    "parse_taillard",
    "format_instance",
    "save_instance",
    "taillard_instance",
]

# Standby power ratings (Whr) of the 20 reference machines; machine j of a
# smaller shop uses the j-th entry.  The CLI exposes this list as `table9`.
TABLE9_POWERS: tuple[int, ...] = (
    769, 802, 1290, 967, 1166, 1003, 1211, 1321, 989, 1411,
    782, 980, 1005, 1333, 867, 1209, 781, 809, 1113, 977,
)

# 15 jobs x 5 machines reference shop (processing minutes, job-major).
_TABLE3_TIMES: tuple[tuple[int, ...], ...] = (
    (3, 4, 6, 10, 3),
    (4, 5, 2, 8, 8),
    (7, 10, 8, 4, 7),
    (9, 10, 2, 2, 6),
    (2, 2, 5, 9, 9),
    (2, 1, 1, 8, 3),
    (5, 7, 8, 2, 5),
    (2, 9, 2, 9, 8),
    (9, 7, 3, 8, 1),
    (8, 5, 7, 2, 2),
    (9, 6, 9, 4, 7),
    (7, 9, 3, 2, 4),
    (8, 8, 2, 2, 9),
    (1, 2, 6, 5, 9),
    (8, 2, 10, 1, 4),
)

# Time seeds of the published Taillard (1993) flowshop benchmark generator,
# keyed by (jobs, machines).  Instance k of a set is rebuilt from seed k.
TAILLARD_TIME_SEEDS: dict[tuple[int, int], tuple[int, ...]] = {
    (20, 5): (
        873654221, 379008056, 1866992158, 216771124, 495070989,
        402959317, 1369363414, 2021925980, 573109518, 88325120,
    ),
}


class InstanceFormatError(ValueError):
    """Malformed instance text; `line` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Instance:
    """Immutable flowshop instance; safe to share across solver runs."""

    n_jobs: int
    n_machines: int
    proc_time: tuple[tuple[int, ...], ...]  # job-major, minutes
    fixed_power: tuple[float, ...]  # one rating per machine

    def __post_init__(self):
        if self.n_jobs < 1 or self.n_machines < 1:
            raise ValueError("instance needs at least one job and one machine")
        if len(self.proc_time) != self.n_jobs:
            raise ValueError("proc_time row count does not match n_jobs")
        for row in self.proc_time:
            if len(row) != self.n_machines:
                raise ValueError("proc_time row width does not match n_machines")
            if any(t < 0 for t in row):
                raise ValueError("processing times must be non-negative")
        if len(self.fixed_power) != self.n_machines:
            raise ValueError("fixed_power length does not match n_machines")
        if any(p <= 0 for p in self.fixed_power):
            raise ValueError("fixed powers must be positive")

    @classmethod
    def from_matrix(cls, proc_time, fixed_power) -> "Instance":
        rows = tuple(tuple(int(t) for t in row) for row in proc_time)
        powers = tuple(float(p) for p in fixed_power)
        return cls(len(rows), len(rows[0]) if rows else 0, rows, powers)


@dataclass(frozen=True)
class TaillardBlock:
    """One parsed block of a Taillard file: times only, powers unset."""

    n_jobs: int
    n_machines: int
    time_seed: int | None
    upper_bound: int | None
    lower_bound: int | None
    proc_time: tuple[tuple[int, ...], ...]  # already transposed to job-major

    def to_instance(self, fixed_power) -> Instance:
        return Instance.from_matrix(self.proc_time, fixed_power)


def check_permutation(perm, n_jobs: int) -> None:
    """Raise ValueError unless `perm` is a bijection on 0..n_jobs-1."""
    if len(perm) != n_jobs:
        raise ValueError(f"permutation length {len(perm)} != {n_jobs} jobs")
    if set(perm) != set(range(n_jobs)):
        raise ValueError("permutation is not a bijection on the job set")


def default_powers(n_machines: int) -> tuple[int, ...]:
    """First `n_machines` entries of the built-in 20-machine power table."""
    if not 1 <= n_machines <= len(TABLE9_POWERS):
        raise ValueError(
            f"no built-in powers for {n_machines} machines; supply them explicitly"
        )
    return TABLE9_POWERS[:n_machines]


def load_table3() -> Instance:
    """The 15x5 reference instance with its five machine power ratings."""
    return Instance.from_matrix(_TABLE3_TIMES, default_powers(5))


def generate_instance(n_jobs: int, n_machines: int, seed: int) -> Instance:
    """Draw a random instance: times uniform on [1, 99] minutes, powers
    uniform on [700, 1500] Whr.  The seed fully determines the instance
    (PCG64 stream, times drawn before powers)."""
    if n_jobs < 1 or n_machines < 1:
        raise ValueError("need n_jobs >= 1 and n_machines >= 1")
    rng = np.random.default_rng(_normalize_seed(seed))
    times = rng.integers(1, 100, size=(n_jobs, n_machines))
    powers = rng.integers(700, 1501, size=n_machines)
    return Instance.from_matrix(times.tolist(), powers.tolist())


def _normalize_seed(seed: int) -> int:
    return seed & 0xFFFFFFFFFFFFFFFF


# ---------------------------------------------------------------------------
# Taillard benchmark generator (Taillard, EJOR 1993)
# ---------------------------------------------------------------------------


def generate_taillard_times(
    n_jobs: int, n_machines: int, time_seed: int
) -> tuple[tuple[int, ...], ...]:
    """Rebuild a benchmark time matrix from its published time seed.

    Uses Taillard's portable linear congruential generator (a=16807,
    m=2^31-1, Schrage decomposition); values are drawn machine-major as in
    the original generator, then transposed to job-major.
    """
    if time_seed <= 0:
        raise ValueError("time seeds are positive")
    seed = time_seed
    machine_major = []
    for _ in range(n_machines):
        row = []
        for _ in range(n_jobs):
            k = seed // 127773
            seed = 16807 * (seed % 127773) - 2836 * k
            if seed < 0:
                seed += 2147483647
            row.append(1 + int(seed / 2147483647 * 99))
        machine_major.append(row)
    return tuple(
        tuple(machine_major[j][i] for j in range(n_machines))
        for i in range(n_jobs)
    )


def taillard_instance(
    n_jobs: int, n_machines: int, index: int, fixed_power=None
) -> Instance:
    """Benchmark instance `index` (1-based) of the (n_jobs, n_machines) set,
    with powers defaulting to the built-in table."""
    try:
        seeds = TAILLARD_TIME_SEEDS[(n_jobs, n_machines)]
    except KeyError:
        raise ValueError(
            f"no embedded time seeds for a {n_jobs}x{n_machines} set; "
            "use generate_taillard_times with an explicit seed"
        ) from None
    if not 1 <= index <= len(seeds):
        raise IndexError(f"instance index {index} outside 1..{len(seeds)}")
    times = generate_taillard_times(n_jobs, n_machines, seeds[index - 1])
    if fixed_power is None:
        fixed_power = default_powers(n_machines)
    return Instance.from_matrix(times, fixed_power)


# ---------------------------------------------------------------------------
# Taillard text format (read-only)
# ---------------------------------------------------------------------------


def _int_tokens(line: str) -> list[int] | None:
    """Tokens of a data line, or None for marker/blank lines.

    A line containing any alphabetic character is a marker ("processing
    times :" and friends) and is skipped; a wordless line whose tokens are
    not all integers is malformed data.
    """
    stripped = line.strip()
    if not stripped or any(ch.isalpha() for ch in stripped):
        return None
    try:
        return [int(tok) for tok in stripped.split()]
    except ValueError:
        raise InstanceFormatError("non-integer value in data line", None)


def _parse_taillard_blocks(text: str) -> list[TaillardBlock]:
    lines = text.splitlines()
    blocks: list[TaillardBlock] = []
    i = 0
    while i < len(lines):
        try:
            tokens = _int_tokens(lines[i])
        except InstanceFormatError as exc:
            raise InstanceFormatError(str(exc), i + 1) from None
        if tokens is None:
            i += 1
            continue
        header_line = i + 1
        if len(tokens) not in (2, 5) or tokens[0] < 1 or tokens[1] < 1:
            raise InstanceFormatError(
                "header must be 'jobs machines' or 'jobs machines seed ub lb'",
                header_line,
            )
        n, m = tokens[0], tokens[1]
        seed, ub, lb = (tokens[2], tokens[3], tokens[4]) if len(tokens) == 5 else (None, None, None)
        i += 1
        values: list[int] = []
        while i < len(lines) and len(values) < n * m:
            try:
                row = _int_tokens(lines[i])
            except InstanceFormatError as exc:
                raise InstanceFormatError(str(exc), i + 1) from None
            if row is not None:
                values.extend(row)
            i += 1
        if len(values) < n * m:
            raise InstanceFormatError(
                f"matrix truncated: expected {n * m} values, found {len(values)}",
                header_line,
            )
        if len(values) > n * m:
            raise InstanceFormatError(
                f"matrix overrun: expected {n * m} values", header_line
            )
        job_major = tuple(
            tuple(values[j * n + k] for j in range(m)) for k in range(n)
        )
        blocks.append(TaillardBlock(n, m, seed, ub, lb, job_major))
    if not blocks:
        raise InstanceFormatError("no instance blocks found")
    return blocks


def parse_taillard(text: str, instance_index: int) -> TaillardBlock:
    """Parse block `instance_index` (1-based) out of a Taillard file.

    Each block is a header line (jobs, machines, and optionally time seed,
    upper bound, lower bound) followed by a machine-major matrix of
    n_machines rows by n_jobs integers; marker lines are ignored.  The
    matrix is transposed so rows are jobs.  The header's seed field is kept
    but never used to regenerate times.
    """
    if instance_index < 1:
        raise IndexError("instance_index is 1-based")
    blocks = _parse_taillard_blocks(text)
    if instance_index > len(blocks):
        raise IndexError(
            f"instance index {instance_index} outside 1..{len(blocks)}"
        )
    return blocks[instance_index - 1]


def count_taillard_blocks(text: str) -> int:
    """Number of instance blocks in a Taillard file."""
    return len(_parse_taillard_blocks(text))


# ---------------------------------------------------------------------------
# Native format: '# comments', 'n m', n job rows, one power row
# ---------------------------------------------------------------------------


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_instance(text: str) -> Instance:
    """Parse the native format: header 'n m', n rows of m integer minutes,
    then one row of m positive power ratings."""
    rows = list(_data_lines(text))
    if not rows:
        raise InstanceFormatError("empty instance file")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise InstanceFormatError("header must be 'n_jobs n_machines'", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InstanceFormatError("header must be two integers", lineno) from None
    if len(rows) != n + 2:
        raise InstanceFormatError(
            f"expected {n} job rows plus one power row, found {len(rows) - 1} data lines"
        )
    times = []
    for lineno, line in rows[1 : n + 1]:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise InstanceFormatError("processing times must be integers", lineno) from None
        if len(row) != m:
            raise InstanceFormatError(f"expected {m} times per job row", lineno)
        times.append(row)
    lineno, line = rows[n + 1]
    try:
        powers = [float(tok) for tok in line.split()]
    except ValueError:
        raise InstanceFormatError("power row must be numeric", lineno) from None
    if len(powers) != m:
        raise InstanceFormatError(f"expected {m} power values", lineno)
    try:
        return Instance.from_matrix(times, powers)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None


def format_instance(instance: Instance) -> str:
    """Serialize to the native format (round-trips through parse_instance)."""
    lines = [f"{instance.n_jobs} {instance.n_machines}"]
    lines += [" ".join(str(t) for t in row) for row in instance.proc_time]
    lines.append(" ".join(_format_power(p) for p in instance.fixed_power))
    return "\n".join(lines) + "\n"


def _format_power(p: float) -> str:
    return str(int(p)) if float(p).is_integer() else repr(p)


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def save_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_instance(instance))
