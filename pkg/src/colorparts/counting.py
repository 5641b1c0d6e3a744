"""Counting admissible colored partitions.

The fast path is a row-by-row dynamic program over merged (total, maxima)
states with big-integer multiplicities; a brute-force enumerator filtered by
explicit path checking serves as the independent oracle, and a triangular
variant counts admissible matrices confined to the prescribed staircase
region (finite-dimensional module dimensions).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .lattice import (
    WeightVector,
    _int_tuple,
    enumerate_row_frequencies,
    initial_maxima,
    maxima_step,
    path_check,
    row_parts,
    row_template,
)
from .qseries import Series

__all__ = [
    "ALGORITHM_VERSION",
    "CountTable",
    "count_admissible",
    "brute_force_count",
    "dimension",
    "prefix_pair_counts",
]

# Bump when the DP changes in any way that could alter cached tables.
ALGORITHM_VERSION = "dp-1"


@dataclass(frozen=True)
class CountTable:
    """P(1..n_max): admissible colored partitions of each n."""

    n_max: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_max < 1 or len(self.counts) != self.n_max:
            raise ValueError("need one count per 1 <= n <= n_max")
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n must be in 1..{self.n_max}")
        return self.counts[n - 1]

    def pairs(self) -> list[list[int]]:
        return [[n, self.counts[n - 1]] for n in range(1, self.n_max + 1)]

    def to_series(self) -> Series:
        """Generating function 1 + sum P(n) q^n as a truncated series."""
        return Series((1,) + self.counts)


def _row_transitions(
    prev: tuple[int, ...], level: int, template: Sequence[Optional[int]]
) -> list[tuple[int, int, tuple[int, ...]]]:
    """All admissible rows on top of maxima ``prev``.

    Returns (parts, weighted, maxima) triples where ``parts`` is the total
    free multiplicity and ``weighted`` its column-weighted sum; the mass the
    row adds at diagonal i is then 2*i*parts - weighted.  Enumerating free
    values only up to the per-column headroom visits exactly the rows that
    survive :func:`maxima_step`.
    """
    w = len(prev)
    out: list[tuple[int, int, tuple[int, ...]]] = []
    maxima = [0] * w

    def descend(t: int, parts: int, weighted: int) -> None:
        if t == w:
            out.append((parts, weighted, tuple(maxima)))
            return
        if t:
            base = maxima[t - 1]
            if prev[t - 1] > base:
                base = prev[t - 1]
        else:
            base = 0
        fixed = template[t]
        if fixed is None:
            maxima[t] = base
            descend(t + 1, parts, weighted)
            for f in range(1, level - base + 1):
                maxima[t] = base + f
                descend(t + 1, parts + f, weighted + (t + 1) * f)
        else:
            value = base + fixed
            if value <= level:
                maxima[t] = value
                descend(t + 1, parts, weighted)

    descend(0, 0, 0)
    return out


def count_admissible(wv: WeightVector, n_max: int) -> CountTable:
    """Exact P(1..n_max) by the merged-state dynamic program.

    States are (total, maxima) pairs with multiplicities; identical states
    are merged by summing.  A state retires into the tally once even the
    smallest part of the next row would push it past n_max, and the run stops
    when that is true of every state.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    w = wv.width
    level = wv.k_total
    counts = [0] * (n_max + 1)
    # maxima -> {total: multiplicity}
    states: dict[tuple[int, ...], dict[int, int]] = {initial_maxima(wv): {0: 1}}
    uniform_cache: dict[tuple[int, ...], list] = {}
    free_template = (None,) * w

    i = 0
    while states:
        i += 1
        if 2 * i - 1 >= w:
            template = free_template
            cache = uniform_cache
        else:
            template = row_template(i, wv)
            cache = {}
        new_states: dict[tuple[int, ...], dict[int, int]] = {}
        for prev, totals in states.items():
            transitions = cache.get(prev)
            if transitions is None:
                transitions = _row_transitions(prev, level, template)
                cache[prev] = transitions
            budget = n_max - min(totals)
            for parts, weighted, nxt in transitions:
                mass = 2 * i * parts - weighted
                if mass > budget:
                    continue
                bucket = new_states.setdefault(nxt, {})
                for total, mult in totals.items():
                    shifted = total + mass
                    if shifted <= n_max:
                        bucket[shifted] = bucket.get(shifted, 0) + mult
        # Retire states the next row can no longer grow within n_max.
        min_next = max(0, 2 * (i + 1) - w)
        states = {}
        for maxima, totals in new_states.items():
            keep: dict[int, int] = {}
            for total, mult in totals.items():
                if total + min_next > n_max:
                    if total:
                        counts[total] += mult
                else:
                    keep[total] = mult
            if keep:
                states[maxima] = keep
    return CountTable(n_max, tuple(counts[1:]))


def brute_force_count(
    wv: WeightVector, n_max: int, row_bound: Optional[int] = None
) -> CountTable:
    """Oracle count: enumerate frequency matrices, filter by path checking.

    Exponential; meant for n_max <= ~12 at widths <= 5.  ``row_bound`` must
    leave no part <= n_max beyond the last enumerated row.  Rows whose free
    sum already exceeds the level are skipped early: the constant-row path
    rejects them anyway.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    w = wv.width
    level = wv.k_total
    bound = row_bound if row_bound is not None else (n_max + w) // 2
    if 2 * (bound + 1) - w <= n_max:
        raise ValueError("row bound leaves parts <= n_max unenumerated")

    templates = [row_template(i, wv) for i in range(bound + 1)]
    # Per row: candidate (row, mass) pairs sorted by mass.
    candidates: list[list[tuple[tuple[int, ...], int]]] = [[]]
    for i in range(1, bound + 1):
        parts = row_parts(i, w)
        rows = []
        for row in _free_fillings(templates[i], level):
            mass = sum(f * v for f, v in zip(row, parts))
            if mass <= n_max:
                rows.append((row, mass))
        rows.sort(key=lambda item: item[1])
        candidates.append(rows)

    row0 = tuple(templates[0])  # fully prescribed
    counts = [0] * (n_max + 1)
    chosen: list[tuple[int, ...]] = [row0]

    def descend(i: int, mass: int) -> None:
        if i > bound:
            if mass and path_check(chosen, wv):
                counts[mass] += 1
            return
        for row, row_mass in candidates[i]:
            if mass + row_mass > n_max:
                break
            chosen.append(row)
            descend(i + 1, mass + row_mass)
            chosen.pop()

    descend(1, 0)
    # The empty matrix (mass 0) is not a partition; everything else with
    # mass 0 is impossible since free parts are >= 1.
    return CountTable(n_max, tuple(counts[1:]))


def _free_fillings(template, level):
    """All rows over a template with free entries in 0..level, free sum <= level."""
    free_positions = [t for t, x in enumerate(template) if x is None]
    base = [x if x is not None else 0 for x in template]
    out = [tuple(base)]
    for position in free_positions:
        extended = []
        for row in out:
            used = sum(row[t] for t in free_positions)
            for f in range(1, level - used + 1):
                grown = list(row)
                grown[position] = f
                extended.append(tuple(grown))
        out.extend(extended)
    return out


def _count_row_fillings(
    prev: tuple[int, ...], level: int, template: Sequence[Optional[int]]
) -> int:
    """Number of admissible rows on top of ``prev`` (column-wise count DP)."""
    ways: dict[int, int] = {}
    first = template[0]
    if first is None:
        for v in range(level + 1):
            ways[v] = 1
    elif first <= level:
        ways[first] = 1
    for t in range(1, len(prev)):
        fixed = template[t]
        nxt: dict[int, int] = {}
        for v, cnt in ways.items():
            base = prev[t - 1] if prev[t - 1] > v else v
            if fixed is None:
                for value in range(base, level + 1):
                    nxt[value] = nxt.get(value, 0) + cnt
            else:
                value = base + fixed
                if value <= level:
                    nxt[value] = nxt.get(value, 0) + cnt
        ways = nxt
    return sum(ways.values())


def dimension(weights: Sequence[int]) -> int:
    """Admissible matrices confined to the triangular prescribed region.

    For finite weights (k_1, ..., k_l) the bracket is [0, 0, k_1, 0, k_2,
    ..., 0, k_l] at width 2l+1, and matrices may have free support only in
    rows 1..l; no bound is placed on the partition mass.
    """
    ks = _int_tuple(weights)
    if not ks:
        raise ValueError("need at least one weight")
    if any(x < 0 for x in ks):
        raise ValueError(f"weights must be nonnegative, got {ks}")
    if sum(ks) == 0:
        raise ValueError("at least one weight must be positive")
    rank = len(ks)
    bracket = [0] * (2 * rank + 1)
    for t, value in enumerate(ks):
        bracket[2 * t + 2] = value
    wv = WeightVector(tuple(bracket))
    level = wv.k_total
    states: dict[tuple[int, ...], int] = {initial_maxima(wv): 1}
    for i in range(1, rank + 1):
        template = row_template(i, wv)
        if i < rank:
            new_states: dict[tuple[int, ...], int] = {}
            for prev, mult in states.items():
                for _, _, nxt in _row_transitions(prev, level, template):
                    new_states[nxt] = new_states.get(nxt, 0) + mult
            states = new_states
        else:
            # Only the count of final-row fillings matters.
            return sum(
                mult * _count_row_fillings(prev, level, template)
                for prev, mult in states.items()
            )
    raise AssertionError("unreachable")


def prefix_pair_counts(
    wv: WeightVector, rows: int, merged: bool = True
) -> list[int]:
    """Admissible prefixes after each of the first ``rows`` diagonal rows.

    No bound is placed on partition mass.  With ``merged`` the DP sums
    multiplicities over merged states; otherwise the (total, maxima) pairs
    are kept as a flat list, replaying the unmerged construction.  The two
    agree entry by entry, which is the conservation diagnostic.
    """
    if rows < 1:
        raise ValueError("need at least one row")
    level = wv.k_total
    out: list[int] = []
    if merged:
        states: dict[tuple[int, ...], int] = {initial_maxima(wv): 1}
        for i in range(1, rows + 1):
            template = row_template(i, wv)
            new_states: dict[tuple[int, ...], int] = {}
            for prev, mult in states.items():
                for _, _, nxt in _row_transitions(prev, level, template):
                    new_states[nxt] = new_states.get(nxt, 0) + mult
            states = new_states
            out.append(sum(states.values()))
    else:
        pairs: list[tuple[int, tuple[int, ...]]] = [(0, initial_maxima(wv))]
        for i in range(1, rows + 1):
            frequency_rows = list(enumerate_row_frequencies(i, wv))
            parts = row_parts(i, wv.width)
            grown: list[tuple[int, tuple[int, ...]]] = []
            for total, prev in pairs:
                for row in frequency_rows:
                    nxt = maxima_step(prev, row, level)
                    if nxt is None:
                        continue
                    mass = sum(f * v for f, v in zip(row, parts))
                    grown.append((total + mass, nxt))
            pairs = grown
            out.append(len(pairs))
    return out
