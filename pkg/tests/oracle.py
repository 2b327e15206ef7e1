"""Brute-force reference implementations used only by tests.

Everything here favors obviousness over speed: plain depth-first
extraction of blocks for shanten, and rule-by-rule recomputation for
scoring, with no shared code or tables from the package under test.
"""

from __future__ import annotations

ORPHANS = [0, 8, 9, 17, 18, 26, 27, 28, 29, 30, 31, 32, 33]


def standard_shanten_bf(counts, meld_count=0):
    """Depth-first over set/partial/pair extraction, minimizing the
    block-count distance."""
    budget = 4 - meld_count
    counts = list(counts)
    best = [99]

    def rec(i, sets, partials, head):
        while i < 34 and counts[i] == 0:
            i += 1
        if i == 34:
            use_s = min(sets, budget)
            use_p = min(partials, budget - use_s)
            val = 2 * budget - 2 * use_s - use_p - head
            if val < best[0]:
                best[0] = val
            return
        c = counts[i]
        counts[i] -= 1
        rec(i if counts[i] else i + 1, sets, partials, head)
        counts[i] += 1
        if c >= 2:
            counts[i] -= 2
            if not head:
                rec(i, sets, partials, 1)
            rec(i, sets, partials + 1, head)
            counts[i] += 2
        if c >= 3:
            counts[i] -= 3
            rec(i, sets + 1, partials, head)
            counts[i] += 3
        if i < 27 and i % 9 <= 6 and counts[i + 1] and counts[i + 2]:
            counts[i] -= 1
            counts[i + 1] -= 1
            counts[i + 2] -= 1
            rec(i, sets + 1, partials, head)
            counts[i] += 1
            counts[i + 1] += 1
            counts[i + 2] += 1
        if i < 27 and i % 9 <= 7 and counts[i + 1]:
            counts[i] -= 1
            counts[i + 1] -= 1
            rec(i, sets, partials + 1, head)
            counts[i] += 1
            counts[i + 1] += 1
        if i < 27 and i % 9 <= 6 and counts[i + 2]:
            counts[i] -= 1
            counts[i + 2] -= 1
            rec(i, sets, partials + 1, head)
            counts[i] += 1
            counts[i + 2] += 1

    rec(0, 0, 0, 0)
    return best[0]


def seven_pairs_shanten_bf(counts):
    pairs = sum(1 for c in counts if c >= 2)
    kinds = sum(1 for c in counts if c >= 1)
    return 6 - pairs + max(0, 7 - kinds)


def kokushi_shanten_bf(counts):
    kinds = sum(1 for k in ORPHANS if counts[k])
    pair = any(counts[k] >= 2 for k in ORPHANS)
    return 13 - kinds - (1 if pair else 0)


def shanten_bf(counts, meld_count=0):
    s = standard_shanten_bf(counts, meld_count)
    if meld_count == 0:
        s = min(s, seven_pairs_shanten_bf(counts), kokushi_shanten_bf(counts))
    return s


def is_win_bf(counts, meld_count=0):
    return shanten_bf(counts, meld_count) == -1


def waits_bf(counts, meld_count=0):
    out = []
    work = list(counts)
    for k in range(34):
        if work[k] >= 4:
            continue
        work[k] += 1
        if is_win_bf(work, meld_count):
            out.append(k)
        work[k] -= 1
    return tuple(out)


def parse_hand(text):
    """'123m45p11z' -> counts list; 0 digit marks a red five (counted as 5)."""
    counts = [0] * 34
    reds = []
    base = {"m": 0, "p": 9, "s": 18, "z": 27}
    num = ""
    for ch in text:
        if ch.isdigit():
            num += ch
        elif ch in base:
            for d in num:
                v = int(d)
                if v == 0:
                    reds.append(base[ch] + 4)
                    counts[base[ch] + 4] += 1
                else:
                    counts[base[ch] + v - 1] += 1
            num = ""
        elif ch == " ":
            continue
        else:
            raise ValueError(f"bad hand text {text!r}")
    return counts, reds
