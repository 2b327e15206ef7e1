"""Precomputed per-suit hand statistics.

For every 9-digit tile-count vector (digits 0..4, sum <= 14) the table
stores, for each block budget m in 0..4 and head flag, the best
(complete sets, partial sets) reachable inside that suit with
sets + partials <= m, packed 6 bits per sub-entry into one 64-bit word.
Honor counts use a degenerate 7-digit variant with runs disabled.

Shanten evaluation then needs one table word per suit instead of any
per-tile search.  Building the tables walks count vectors in ascending
base-5 code order, so every decomposition branch refers to an already
solved smaller code.
"""

from __future__ import annotations

import os
import struct
import zlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np

SUIT_DIGITS = 9
HONOR_DIGITS = 7
SUIT_CODES = 5**SUIT_DIGITS
HONOR_CODES = 5**HONOR_DIGITS
SUIT_LEGAL_COUNT = 405_350
HONOR_LEGAL_COUNT = 43_130
IMPOSSIBLE = 0x3F
NEG = -99  # impossible marker in the unpacked value arrays

_MAGIC = b"MJSUIT1\x00"
_HEADER = struct.Struct("<8sIIII")

try:  # the builder and hot loops below are numba-friendly plain loops
    from numba import njit as _njit

    def _jit(fn):
        return _njit(cache=True)(fn)

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep but stay usable
    def _jit(fn):
        return fn

    HAVE_NUMBA = False


def _fill_stats(n_digits: int, allow_runs: bool, dp: np.ndarray) -> None:
    # dp[code, h * 5 + s] = max partial sets with s complete sets and
    # (h != 0) a reserved head pair, or -1 when unreachable.
    ncodes = dp.shape[0]
    pow5 = np.empty(n_digits, np.int64)
    p = 1
    for i in range(n_digits - 1, -1, -1):
        pow5[i] = p
        p *= 5
    for j in range(10):
        dp[0, j] = -1
    dp[0, 0] = 0
    for code in range(1, ncodes):
        i = 0
        while (code // pow5[i]) % 5 == 0:
            i += 1
        d = (code // pow5[i]) % 5
        row = dp[code]
        for j in range(10):
            row[j] = -1
        # leave one copy unused
        child = dp[code - pow5[i]]
        for j in range(10):
            if child[j] > row[j]:
                row[j] = child[j]
        if d >= 2:
            child = dp[code - 2 * pow5[i]]
            for h in range(2):
                for s in range(5):
                    q = child[h * 5 + s]
                    if q < 0:
                        continue
                    if h == 0 and q > row[5 + s]:  # pair reserved as head
                        row[5 + s] = q
                    q2 = q + 1 if q < 4 else 4  # pair kept as a partial set
                    if q2 > row[h * 5 + s]:
                        row[h * 5 + s] = q2
        if d >= 3:
            child = dp[code - 3 * pow5[i]]
            for h in range(2):
                for s in range(4):
                    q = child[h * 5 + s]
                    if q >= 0 and q > row[h * 5 + s + 1]:
                        row[h * 5 + s + 1] = q
        if allow_runs:
            if i + 2 < n_digits and (code // pow5[i + 1]) % 5 > 0 and (code // pow5[i + 2]) % 5 > 0:
                child = dp[code - pow5[i] - pow5[i + 1] - pow5[i + 2]]
                for h in range(2):
                    for s in range(4):
                        q = child[h * 5 + s]
                        if q >= 0 and q > row[h * 5 + s + 1]:
                            row[h * 5 + s + 1] = q
            if i + 1 < n_digits and (code // pow5[i + 1]) % 5 > 0:
                child = dp[code - pow5[i] - pow5[i + 1]]
                for h in range(2):
                    for s in range(5):
                        q = child[h * 5 + s]
                        if q >= 0:
                            q2 = q + 1 if q < 4 else 4
                            if q2 > row[h * 5 + s]:
                                row[h * 5 + s] = q2
            if i + 2 < n_digits and (code // pow5[i + 2]) % 5 > 0:
                child = dp[code - pow5[i] - pow5[i + 2]]
                for h in range(2):
                    for s in range(5):
                        q = child[h * 5 + s]
                        if q >= 0:
                            q2 = q + 1 if q < 4 else 4
                            if q2 > row[h * 5 + s]:
                                row[h * 5 + s] = q2


def _pack_words(dp: np.ndarray, words: np.ndarray) -> None:
    # sub-entry for (m, h): sets in bits 0-2, partials in bits 3-5,
    # 0x3F when no decomposition provides the head
    ncodes = dp.shape[0]
    for code in range(ncodes):
        row = dp[code]
        word = np.uint64(0)
        for m in range(5):
            for h in range(2):
                best_v = -1
                best_s = 0
                best_p = 0
                for s in range(m + 1):
                    q = row[h * 5 + s]
                    if q < 0:
                        continue
                    pe = q if q < m - s else m - s
                    v = 2 * s + pe
                    if v > best_v or (v == best_v and s > best_s):
                        best_v = v
                        best_s = s
                        best_p = pe
                sub = IMPOSSIBLE if best_v < 0 else (best_s | (best_p << 3))
                word |= np.uint64(sub) << np.uint64(6 * (m * 2 + h))
        words[code] = word


_fill_stats_fast = _jit(_fill_stats)
_pack_words_fast = _jit(_pack_words)


def _digit_sums(ncodes: int, n_digits: int) -> np.ndarray:
    codes = np.arange(ncodes, dtype=np.int64)
    total = np.zeros(ncodes, np.int16)
    for _ in range(n_digits):
        total += (codes % 5).astype(np.int16)
        codes //= 5
    return total


def legal_codes(n_digits: int) -> np.ndarray:
    """Ascending base-5 codes whose digit sum is a legal tile count (<= 14)."""
    ncodes = 5**n_digits
    return np.nonzero(_digit_sums(ncodes, n_digits) <= 14)[0]


def _values_from_words(words: np.ndarray) -> np.ndarray:
    vals = np.empty((words.shape[0], 10), np.int8)
    for idx in range(10):
        sub = (words >> np.uint64(6 * idx)) & np.uint64(0x3F)
        s = (sub & np.uint64(7)).astype(np.int16)
        p = (sub >> np.uint64(3)).astype(np.int16)
        v = (2 * s + p).astype(np.int8)
        v[sub == IMPOSSIBLE] = NEG
        vals[:, idx] = v
    return vals


@dataclass(frozen=True)
class ShantenTables:
    """Packed words for legal codes plus dense per-code value rows."""

    suit_words: np.ndarray  # uint64, one per legal 9-digit code, ascending
    honor_words: np.ndarray  # uint64, one per legal 7-digit code, ascending
    suit_vals: np.ndarray  # int8 [5^9, 10], 2*sets+partials per (m, head)
    honor_vals: np.ndarray  # int8 [5^7, 10]


def _assemble(suit_dense: np.ndarray, honor_dense: np.ndarray) -> ShantenTables:
    suit_idx = legal_codes(SUIT_DIGITS)
    honor_idx = legal_codes(HONOR_DIGITS)
    assert suit_idx.shape[0] == SUIT_LEGAL_COUNT, suit_idx.shape[0]
    assert honor_idx.shape[0] == HONOR_LEGAL_COUNT, honor_idx.shape[0]
    suit_words = suit_dense[suit_idx].copy()
    honor_words = honor_dense[honor_idx].copy()
    # zero out codes for tile counts above 14 so the derived arrays are
    # bit-identical whether built fresh or loaded from a blob
    suit_clean = np.zeros_like(suit_dense)
    suit_clean[suit_idx] = suit_words
    honor_clean = np.zeros_like(honor_dense)
    honor_clean[honor_idx] = honor_words
    return ShantenTables(
        suit_words=suit_words,
        honor_words=honor_words,
        suit_vals=_values_from_words(suit_clean),
        honor_vals=_values_from_words(honor_clean),
    )


def build_tables() -> ShantenTables:
    """Construct both tables from scratch; deterministic, identical bytes per run."""
    suit_dp = np.empty((SUIT_CODES, 10), np.int8)
    _fill_stats_fast(SUIT_DIGITS, True, suit_dp)
    suit_words = np.zeros(SUIT_CODES, np.uint64)
    _pack_words_fast(suit_dp, suit_words)
    del suit_dp

    honor_dp = np.empty((HONOR_CODES, 10), np.int8)
    _fill_stats_fast(HONOR_DIGITS, False, honor_dp)
    honor_words = np.zeros(HONOR_CODES, np.uint64)
    _pack_words_fast(honor_dp, honor_words)
    return _assemble(suit_words, honor_words)


def save_tables(tables: ShantenTables, path: str | Path) -> None:
    payload = tables.suit_words.astype("<u8").tobytes() + tables.honor_words.astype("<u8").tobytes()
    header = _HEADER.pack(
        _MAGIC,
        tables.suit_words.shape[0],
        tables.honor_words.shape[0],
        zlib.crc32(payload),
        0,
    )
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(header + payload)
    os.replace(tmp, path)


def load_tables(path: str | Path) -> ShantenTables:
    raw = Path(path).read_bytes()
    magic, n_suit, n_honor, crc, _ = _HEADER.unpack_from(raw)
    if magic != _MAGIC:
        raise ValueError(f"not a suit-table blob: {path}")
    payload = raw[_HEADER.size :]
    if zlib.crc32(payload) != crc:
        raise ValueError(f"suit-table blob corrupt: {path}")
    if n_suit != SUIT_LEGAL_COUNT or n_honor != HONOR_LEGAL_COUNT:
        raise ValueError(f"unexpected table cardinality {n_suit}/{n_honor}")
    suit_words = np.frombuffer(payload, "<u8", count=n_suit).astype(np.uint64)
    honor_words = np.frombuffer(payload, "<u8", count=n_honor, offset=8 * n_suit).astype(np.uint64)

    suit_dense = np.zeros(SUIT_CODES, np.uint64)
    suit_dense[legal_codes(SUIT_DIGITS)] = suit_words
    honor_dense = np.zeros(HONOR_CODES, np.uint64)
    honor_dense[legal_codes(HONOR_DIGITS)] = honor_words
    return ShantenTables(
        suit_words=suit_words,
        honor_words=honor_words,
        suit_vals=_values_from_words(suit_dense),
        honor_vals=_values_from_words(honor_dense),
    )


def default_table_path() -> Path:
    env = os.environ.get("MJSIM_TABLE_PATH")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "_data" / "suit_tables.bin"


_TABLES: ShantenTables | None = None


def get_tables() -> ShantenTables:
    """Singleton; loads the cached blob, building and caching it on first use."""
    global _TABLES
    if _TABLES is None:
        path = default_table_path()
        if path.is_file():
            _TABLES = load_tables(path)
        else:
            _TABLES = build_tables()
            try:
                save_tables(_TABLES, path)
            except OSError:
                pass
    return _TABLES
