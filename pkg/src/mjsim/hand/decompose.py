"""Enumeration of standard winning-hand decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field

RUN = "run"
TRIPLET = "triplet"


@dataclass(frozen=True)
class Decomposition:
    """One way to split a winning hand into a pair and complete sets.

    `sets` holds concealed sets as (RUN|TRIPLET, start kind); melds are
    carried through unchanged so scoring can treat them separately.
    """

    pair: int
    sets: tuple[tuple[str, int], ...]
    melds: tuple = field(default=())


def _concealed_sets(counts: bytearray, needed: int) -> list[tuple[tuple[str, int], ...]]:
    if needed == 0:
        return [()] if not any(counts) else []
    i = 0
    while i < 34 and counts[i] == 0:
        i += 1
    if i == 34:
        return []
    out = []
    if counts[i] >= 3:
        counts[i] -= 3
        for rest in _concealed_sets(counts, needed - 1):
            out.append(((TRIPLET, i),) + rest)
        counts[i] += 3
    if i < 27 and i % 9 <= 6 and counts[i + 1] and counts[i + 2]:
        counts[i] -= 1
        counts[i + 1] -= 1
        counts[i + 2] -= 1
        for rest in _concealed_sets(counts, needed - 1):
            out.append(((RUN, i),) + rest)
        counts[i] += 1
        counts[i + 1] += 1
        counts[i + 2] += 1
    return out


def decompose_wins(counts, melds=()) -> list[Decomposition]:
    """All distinct standard decompositions of a winning hand.

    Returns an empty list when the concealed part admits none (the hand
    may still win as seven pairs or thirteen orphans).  Order is
    deterministic: by pair kind, then by set list.
    """
    needed = 4 - len(melds)
    results = set()
    work = bytearray(counts)
    for pair in range(34):
        if work[pair] < 2:
            continue
        work[pair] -= 2
        for sets in _concealed_sets(work, needed):
            results.add((pair, tuple(sorted(sets))))
        work[pair] += 2
    melds = tuple(melds)
    return [Decomposition(pair, sets, melds) for pair, sets in sorted(results)]
