"""Built-in baseline policies.

Both work from public interfaces only: the random policy samples the
legal list, the heuristic reconstructs its hand from the observation and
greedily minimizes shanten.
"""

from __future__ import annotations

from .. import actions as A
from ..hand.shanten import shanten as hand_shanten
from ..rng import RngState, randbelow
from ..tiles import RED_FIVE_KINDS, is_honor, is_terminal
from .observe import PAD_TOKEN, Observation


def random_policy(legal: tuple[int, ...], rng: RngState) -> tuple[int, RngState]:
    """Uniform over legal actions."""
    if not legal:
        raise ValueError("no legal actions to sample")
    i, rng = randbelow(rng, len(legal))
    return legal[i], rng


def _counts_from_tokens(tokens) -> tuple[list[int], int]:
    counts = [0] * 34
    n = 0
    for tok in tokens:
        if tok == PAD_TOKEN:
            continue
        n += 1
        counts[tok if tok < 34 else RED_FIVE_KINDS[tok - 34]] += 1
    # 14-tile form hands have n % 3 == 2, 13-tile form n % 3 == 1
    meld_count = (14 - n) // 3 if n % 3 == 2 else (13 - n) // 3
    return counts, meld_count


def _last_discard_kind(obs: Observation) -> int:
    for ev_type, _, tok in reversed(obs.event_tokens):
        if ev_type == 1 and tok != PAD_TOKEN:  # discard
            return tok if tok < 34 else RED_FIVE_KINDS[tok - 34]
        if ev_type == 6 and tok != PAD_TOKEN:  # added kan (robbing window)
            return tok if tok < 34 else RED_FIVE_KINDS[tok - 34]
    raise ValueError("no discard in the event history")


def _discard_key(kind: int):
    return (0 if is_honor(kind) else 1 if is_terminal(kind) else 2, kind)


def heuristic_policy(obs: Observation, legal: tuple[int, ...]) -> int:
    """Win when possible, declare riichi when legal, otherwise discard to
    minimize shanten (honors first on ties); call only when the call
    strictly improves shanten."""
    legal_set = set(legal)
    if A.TSUMO in legal_set:
        return A.TSUMO
    if A.RON in legal_set:
        return A.RON
    if A.RIICHI in legal_set:
        return A.RIICHI

    counts, meld_count = _counts_from_tokens(obs.hand_tokens)

    discards = [a for a in legal if A.is_discard(a)]
    if discards:
        best = None
        for a in discards:
            kind = A.discard_kind(a)
            counts[kind] -= 1
            sh = hand_shanten(counts, meld_count)
            counts[kind] += 1
            key = (sh, _discard_key(kind), 1 if a >= A.DISCARD_RED_BASE else 0)
            if best is None or key < best[0]:
                best = (key, a)
        return best[1]

    if A.PASS in legal_set:
        current = hand_shanten(counts, meld_count)
        call_kind = _last_discard_kind(obs)
        best_call = None
        for a in legal:
            if a == A.PASS or a == A.RON:
                continue
            after = list(counts)
            melds_after = meld_count + 1
            if a == A.PON:
                after[call_kind] -= 2
            elif a == A.KAN_OPEN:
                after[call_kind] -= 3
            elif a == A.CHI_LOW:
                after[call_kind + 1] -= 1
                after[call_kind + 2] -= 1
            elif a == A.CHI_MID:
                after[call_kind - 1] -= 1
                after[call_kind + 1] -= 1
            elif a == A.CHI_HIGH:
                after[call_kind - 2] -= 1
                after[call_kind - 1] -= 1
            else:
                continue
            sh = hand_shanten(after, melds_after)
            if sh < current and (best_call is None or sh < best_call[0]):
                best_call = (sh, a)
        if best_call is not None:
            return best_call[1]
        return A.PASS

    return legal[0]
