import numpy as np
import pytest

from mjsim.hand import build_tables, load_tables, save_tables
from mjsim.hand.tables import (
    HONOR_LEGAL_COUNT,
    IMPOSSIBLE,
    SUIT_DIGITS,
    SUIT_LEGAL_COUNT,
    legal_codes,
)


def code_of(vec):
    c = 0
    for d in vec:
        c = c * 5 + d
    return c


def unpack(word, m, head):
    sub = (int(word) >> (6 * (m * 2 + head))) & 0x3F
    if sub == IMPOSSIBLE:
        return None
    return sub & 7, sub >> 3


@pytest.fixture(scope="module")
def built():
    return build_tables()


def test_cardinalities():
    assert legal_codes(SUIT_DIGITS).shape[0] == SUIT_LEGAL_COUNT
    assert legal_codes(7).shape[0] == HONOR_LEGAL_COUNT


def test_known_entries(built):
    idx = {c: i for i, c in enumerate(legal_codes(SUIT_DIGITS).tolist())}

    empty = built.suit_words[idx[code_of([0] * 9)]]
    for m in range(5):
        assert unpack(empty, m, 0) == (0, 0)
        assert unpack(empty, m, 1) is None  # no pair available for a head

    one_run = built.suit_words[idx[code_of([1, 1, 1, 0, 0, 0, 0, 0, 0])]]
    assert unpack(one_run, 1, 0) == (1, 0)
    assert unpack(one_run, 4, 0) == (1, 0)
    assert unpack(one_run, 0, 0) == (0, 0)

    two_pairs = built.suit_words[idx[code_of([2, 2, 0, 0, 0, 0, 0, 0, 0])]]
    assert unpack(two_pairs, 2, 0) == (0, 2)  # both pairs as partial sets
    assert unpack(two_pairs, 1, 1) == (0, 1)  # head plus one partial
    assert unpack(two_pairs, 2, 1) == (0, 1)


def test_build_is_deterministic_and_roundtrips(tmp_path, built):
    again = build_tables()
    assert np.array_equal(built.suit_words, again.suit_words)
    assert np.array_equal(built.honor_words, again.honor_words)

    blob = tmp_path / "tables.bin"
    save_tables(built, blob)
    loaded = load_tables(blob)
    assert np.array_equal(loaded.suit_words, built.suit_words)
    assert np.array_equal(loaded.honor_words, built.honor_words)
    assert np.array_equal(loaded.suit_vals, built.suit_vals)

    data = bytearray(blob.read_bytes())
    data[40] ^= 0xFF
    bad = tmp_path / "corrupt.bin"
    bad.write_bytes(bytes(data))
    with pytest.raises(ValueError):
        load_tables(bad)


def test_honor_table_has_no_runs(built):
    # 1z 2z 3z must give no complete set, unlike 1m 2m 3m
    hidx = {c: i for i, c in enumerate(legal_codes(7).tolist())}
    word = built.honor_words[hidx[code_of([1, 1, 1, 0, 0, 0, 0])]]
    assert unpack(word, 4, 0) == (0, 0)
