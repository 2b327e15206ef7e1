"""Shanten evaluation over 34-kind count vectors.

The standard form is resolved with one table word per suit (plus the
honor variant) and a tiny budget-split merge; seven pairs and thirteen
orphans are closed-form.  -1 means a complete hand, 0 means tenpai.
"""

from __future__ import annotations

import numpy as np

from ..tiles import NUM_KINDS, ORPHAN_KINDS, ContractError
from .tables import NEG, get_tables

POW5_SUIT = tuple(5 ** (8 - i) for i in range(9))
POW5_HONOR = tuple(5 ** (6 - i) for i in range(7))
_ORPHAN_SET = frozenset(ORPHAN_KINDS)

try:
    from numba import njit as _njit

    def _jit(fn):
        return _njit(cache=True)(fn)

except ImportError:  # pragma: no cover
    def _jit(fn):
        return fn


def _std_best(cm: int, cp: int, cs: int, cz: int, budget: int,
              suit_vals: np.ndarray, honor_vals: np.ndarray) -> int:
    # best 2*sets + partials + head over all block-budget splits
    a0 = np.full(budget + 1, NEG, np.int64)
    a1 = np.full(budget + 1, NEG, np.int64)
    row = suit_vals[cm]
    for b in range(budget + 1):
        a0[b] = row[b * 2]
        a1[b] = row[b * 2 + 1]
    for g in range(3):
        if g == 0:
            row = suit_vals[cp]
        elif g == 1:
            row = suit_vals[cs]
        else:
            row = honor_vals[cz]
        n0 = np.full(budget + 1, NEG, np.int64)
        n1 = np.full(budget + 1, NEG, np.int64)
        for b in range(budget + 1):
            for k in range(b + 1):
                v0 = row[k * 2]
                v1 = row[k * 2 + 1]
                if v0 > NEG:
                    if a0[b - k] > NEG and a0[b - k] + v0 > n0[b]:
                        n0[b] = a0[b - k] + v0
                    if a1[b - k] > NEG and a1[b - k] + v0 > n1[b]:
                        n1[b] = a1[b - k] + v0
                if v1 > NEG and a0[b - k] > NEG and a0[b - k] + v1 > n1[b]:
                    n1[b] = a0[b - k] + v1
        a0, a1 = n0, n1
    best = a0[budget]
    if a1[budget] > NEG and a1[budget] + 1 > best:
        best = a1[budget] + 1
    return best


_std_best_fast = _jit(_std_best)


def _std_win_mask(cm: int, cp: int, cs: int, cz: int, counts: np.ndarray,
                  meld_count: int, pow_suit: np.ndarray, pow_honor: np.ndarray,
                  suit_vals: np.ndarray, honor_vals: np.ndarray) -> int:
    # bit k set when adding one tile of kind k completes the standard form
    budget = 4 - meld_count
    target = 2 * budget + 1  # value giving shanten -1
    mask = 0
    for k in range(34):
        if counts[k] >= 4:
            continue
        if k < 9:
            best = _std_best_fast(cm + pow_suit[k], cp, cs, cz, budget, suit_vals, honor_vals)
        elif k < 18:
            best = _std_best_fast(cm, cp + pow_suit[k - 9], cs, cz, budget, suit_vals, honor_vals)
        elif k < 27:
            best = _std_best_fast(cm, cp, cs + pow_suit[k - 18], cz, budget, suit_vals, honor_vals)
        else:
            best = _std_best_fast(cm, cp, cs, cz + pow_honor[k - 27], budget, suit_vals, honor_vals)
        if best >= target:
            mask |= 1 << k
    return mask


_std_win_mask_fast = _jit(_std_win_mask)

_POW_SUIT_ARR = np.array(POW5_SUIT, np.int64)
_POW_HONOR_ARR = np.array(POW5_HONOR, np.int64)


def codes_from_counts(counts) -> tuple[int, int, int, int]:
    cm = cp = cs = cz = 0
    for i in range(9):
        cm = cm * 5 + counts[i]
        cp = cp * 5 + counts[9 + i]
        cs = cs * 5 + counts[18 + i]
    for i in range(7):
        cz = cz * 5 + counts[27 + i]
    return cm, cp, cs, cz


def counts_from_tiles(tile_ids) -> bytes:
    counts = bytearray(NUM_KINDS)
    for t in tile_ids:
        counts[t >> 2] += 1
    return bytes(counts)


def _check_counts(counts, meld_count: int) -> int:
    total = 0
    for c in counts:
        if c < 0 or c > 4:
            raise ContractError(f"count out of range: {list(counts)}")
        total += c
    if not 0 <= meld_count <= 4:
        raise ContractError(f"meld count out of range: {meld_count}")
    if total + 3 * meld_count not in (13, 14):
        raise ContractError(f"bad hand size {total} with {meld_count} melds")
    return total


def shanten_standard_codes(cm: int, cp: int, cs: int, cz: int, meld_count: int) -> int:
    budget = 4 - meld_count
    tables = get_tables()
    best = _std_best_fast(cm, cp, cs, cz, budget, tables.suit_vals, tables.honor_vals)
    return 2 * budget - int(best)


def shanten_standard(counts, meld_count: int = 0) -> int:
    _check_counts(counts, meld_count)
    cm, cp, cs, cz = codes_from_counts(counts)
    return shanten_standard_codes(cm, cp, cs, cz, meld_count)


def shanten_seven_pairs(counts) -> int:
    pairs = 0
    kinds = 0
    for c in counts:
        if c:
            kinds += 1
            if c >= 2:
                pairs += 1
    return 6 - pairs + max(0, 7 - kinds)


def shanten_kokushi(counts) -> int:
    kinds = 0
    has_pair = 0
    for k in ORPHAN_KINDS:
        if counts[k]:
            kinds += 1
            if counts[k] >= 2:
                has_pair = 1
    return 13 - kinds - has_pair


def shanten(counts, meld_count: int = 0) -> int:
    """Minimum over the standard form and, for concealed hands, the
    seven-pair and thirteen-orphan forms."""
    _check_counts(counts, meld_count)
    cm, cp, cs, cz = codes_from_counts(counts)
    return shanten_codes(cm, cp, cs, cz, counts, meld_count)


def shanten_codes(cm: int, cp: int, cs: int, cz: int, counts, meld_count: int) -> int:
    s = shanten_standard_codes(cm, cp, cs, cz, meld_count)
    if meld_count == 0 and s > -1:
        sp = shanten_seven_pairs(counts)
        if sp < s:
            s = sp
        if s > -1:
            kk = shanten_kokushi(counts)
            if kk < s:
                s = kk
    return s


def is_winning(counts, meld_count: int = 0) -> bool:
    return shanten(counts, meld_count) == -1


def waits(counts, meld_count: int = 0) -> tuple[int, ...]:
    """Kinds completing a 13-tile-form hand, empty when not tenpai."""
    total = _check_counts(counts, meld_count)
    if total + 3 * meld_count != 13:
        raise ContractError("waits need a 13-tile-form hand")
    cm, cp, cs, cz = codes_from_counts(counts)
    return waits_from_codes(cm, cp, cs, cz, counts, meld_count)


def waits_from_codes(cm: int, cp: int, cs: int, cz: int, counts,
                     meld_count: int) -> tuple[int, ...]:
    tables = get_tables()
    arr = np.frombuffer(bytes(counts), np.uint8)
    mask = _std_win_mask_fast(cm, cp, cs, cz, arr, meld_count,
                              _POW_SUIT_ARR, _POW_HONOR_ARR,
                              tables.suit_vals, tables.honor_vals)
    mask = int(mask)
    if meld_count == 0:
        # seven pairs: six pairs and a single complete on the single's kind
        pairs = 0
        single = -1
        ok = True
        for k in range(NUM_KINDS):
            c = counts[k]
            if c == 2:
                pairs += 1
            elif c == 1:
                single = k
            elif c != 0:
                ok = False
        if ok and pairs == 6 and single >= 0:
            mask |= 1 << single
        # thirteen orphans
        present = 0
        has_pair = False
        clean = True
        for k in range(NUM_KINDS):
            c = counts[k]
            if not c:
                continue
            if k in _ORPHAN_SET:
                present += 1
                if c >= 2:
                    has_pair = True
            else:
                clean = False
        if clean:
            if present == 13:
                for k in ORPHAN_KINDS:
                    if counts[k] < 4:
                        mask |= 1 << k
            elif present == 12 and has_pair:
                for k in ORPHAN_KINDS:
                    if counts[k] == 0:
                        mask |= 1 << k
    return tuple(k for k in range(NUM_KINDS) if (mask >> k) & 1)
