"""Hand construction, invariant checking, and state serialization."""

from __future__ import annotations

import hashlib
import json
from bisect import bisect_right

from ..hand.shanten import (
    POW5_HONOR,
    POW5_SUIT,
    codes_from_counts,
    shanten_codes,
    waits_from_codes,
)
from ..melds import MELD_NAMES, Meld
from ..tiles import DEAD_WALL_START, NUM_KINDS, NUM_TILES, RULE_NO_RED, tile_name
from .types import (
    EV_NAMES,
    MODE_NAMES,
    PH_ACT,
    PH_CALL,
    PH_GAME_END,
    GameState,
    HandState,
    KyokuResult,
    START_SCORE,
)


def _finish_hand(concealed, counts, codes, melds, river, flags) -> HandState:
    meld_count = len(melds)
    sh = shanten_codes(*codes, counts, meld_count)
    w = ()
    if sh == 0 and len(concealed) + 3 * meld_count == 13:
        w = waits_from_codes(*codes, counts, meld_count)
    return HandState(concealed, counts, codes, tuple(melds), tuple(river),
                     flags["riichi"], flags["riichi_index"], flags["ippatsu"],
                     flags["temp_furiten"], flags["perm_furiten"], sh, w)


def make_hand(concealed_ids, melds=(), river=(), riichi=0, riichi_index=-1,
              ippatsu=False, temp_furiten=False, perm_furiten=False) -> HandState:
    """Build a HandState with counts, codes, shanten, and waits derived."""
    concealed = tuple(sorted(concealed_ids))
    counts = bytearray(NUM_KINDS)
    for t in concealed:
        counts[t >> 2] += 1
    counts = bytes(counts)
    codes = codes_from_counts(counts)
    flags = dict(riichi=riichi, riichi_index=riichi_index, ippatsu=ippatsu,
                 temp_furiten=temp_furiten, perm_furiten=perm_furiten)
    return _finish_hand(concealed, counts, codes, melds, river, flags)


def _code_shift(codes, kind: int, delta: int) -> tuple[int, int, int, int]:
    cm, cp, cs, cz = codes
    if kind < 9:
        cm += delta * POW5_SUIT[kind]
    elif kind < 18:
        cp += delta * POW5_SUIT[kind - 9]
    elif kind < 27:
        cs += delta * POW5_SUIT[kind - 18]
    else:
        cz += delta * POW5_HONOR[kind - 27]
    return cm, cp, cs, cz


def hand_add(hand: HandState, tile: int, **flags) -> HandState:
    idx = bisect_right(hand.concealed, tile)
    concealed = hand.concealed[:idx] + (tile,) + hand.concealed[idx:]
    kind = tile >> 2
    counts = bytearray(hand.counts)
    counts[kind] += 1
    return _finish_hand(concealed, bytes(counts), _code_shift(hand.codes, kind, 1),
                        hand.melds, hand.river, _carry(hand, flags))


def hand_remove(hand: HandState, tiles_gone, river=None, melds=None, **flags) -> HandState:
    remaining = list(hand.concealed)
    counts = bytearray(hand.counts)
    codes = hand.codes
    for t in tiles_gone:
        remaining.remove(t)
        counts[t >> 2] -= 1
        codes = _code_shift(codes, t >> 2, -1)
    return _finish_hand(tuple(remaining), bytes(counts), codes,
                        hand.melds if melds is None else melds,
                        hand.river if river is None else river,
                        _carry(hand, flags))


def _carry(hand: HandState, flags: dict) -> dict:
    out = dict(riichi=hand.riichi, riichi_index=hand.riichi_index,
               ippatsu=hand.ippatsu, temp_furiten=hand.temp_furiten,
               perm_furiten=hand.perm_furiten)
    out.update(flags)
    return out


class InvariantViolation(AssertionError):
    pass


def check_invariants(state: GameState, fast: bool = False) -> None:
    """Raise InvariantViolation when a conservation rule is broken.

    `fast` checks conservation, the score identity, and mask sanity only,
    skipping the redundant-field coherence sweeps; the soak suite uses it
    on every step.
    """
    total = sum(state.scores) + 1000 * state.deposits
    if total != 4 * START_SCORE:
        raise InvariantViolation(f"score sum {total} != {4 * START_SCORE}")

    seen = bytearray(NUM_TILES)
    wall = state.wall
    tiles = wall.tiles
    count = 0
    # each kan draw consumes the tail of the dead wall and the dead wall
    # absorbs the last live tile, so both boundaries shift together
    for pos in range(wall.cursor, DEAD_WALL_START - wall.kan_draws):
        seen[tiles[pos]] = 1
        count += 1
    for pos in range(DEAD_WALL_START - wall.kan_draws, NUM_TILES - wall.kan_draws):
        seen[tiles[pos]] = 1
        count += 1
    for hand in state.hands:
        for t in hand.concealed:
            seen[t] = 1
        count += len(hand.concealed)
        for m in hand.melds:
            for t in m.tiles:
                seen[t] = 1
            count += len(m.tiles)
        for rt in hand.river:
            if not rt.called:
                seen[rt.tile] = 1
                count += 1
    if count != NUM_TILES or not all(seen):
        missing = [t for t in range(NUM_TILES) if not seen[t]]
        raise InvariantViolation(
            f"tile conservation broken: {count} marks, missing {missing[:8]}")

    if (state.phase in (PH_ACT, PH_CALL) and not state.terminated
            and not state.truncated and not state.legal):
        raise InvariantViolation("non-terminal state with empty legal mask")
    if (state.terminated or state.truncated) and state.legal:
        raise InvariantViolation("terminal state with legal actions")
    if fast:
        return

    for seat, hand in enumerate(state.hands):
        counts = bytearray(NUM_KINDS)
        for t in hand.concealed:
            counts[t >> 2] += 1
        if bytes(counts) != hand.counts:
            raise InvariantViolation(f"seat {seat} counts out of sync")
        if hand.codes != codes_from_counts(hand.counts):
            raise InvariantViolation(f"seat {seat} codes out of sync")
        size = len(hand.concealed) + 3 * len(hand.melds)
        # the player to act always holds a 14th tile-equivalent, as does the
        # added-kan declarer while the robbing window is open
        expected = 13
        if state.phase == PH_ACT and state.actor == seat:
            expected = 14
        elif state.phase == PH_CALL and state.call_chankan and seat == state.call_from:
            expected = 14
        if state.phase == PH_GAME_END:
            if size not in (13, 14):
                raise InvariantViolation(f"seat {seat} holds {size} tiles at game end")
        elif size != expected:
            raise InvariantViolation(
                f"seat {seat} holds {size} tile-equivalents, expected {expected}")

    for seat, hand in enumerate(state.hands):
        if hand.riichi and hand.shanten > 0 and len(hand.concealed) + 3 * len(hand.melds) == 13:
            raise InvariantViolation(f"seat {seat} in riichi but not tenpai")


def _meld_dict(m: Meld, rule: int) -> dict:
    return {
        "type": MELD_NAMES[m.type],
        "tiles": [tile_name(t, rule) for t in m.tiles],
        "tile_ids": list(m.tiles),
        "called_tile": m.called_tile,
        "from_seat": m.from_seat,
    }


def serialize_state(state: GameState) -> dict:
    """Full JSON-ready snapshot (includes hidden information)."""
    rule = state.config.rule
    return {
        "config": {
            "rule": "no-red" if rule == RULE_NO_RED else "red",
            "mode": MODE_NAMES[state.config.mode],
            "kazoe": state.config.kazoe,
            "double_yakuman": state.config.double_yakuman,
            "agari_yame": state.config.agari_yame,
            "max_steps": state.config.max_steps,
        },
        "kyoku": state.kyoku,
        "honba": state.honba,
        "deposits": state.deposits,
        "scores": list(state.scores),
        "phase": state.phase,
        "actor": state.actor,
        "drawn": state.drawn,
        "terminated": state.terminated,
        "truncated": state.truncated,
        "step_count": state.step_count,
        "wall": {
            "tiles": list(state.wall.tiles),
            "cursor": state.wall.cursor,
            "kan_draws": state.wall.kan_draws,
            "dora_count": state.wall.dora_count,
        },
        "dora_indicators": [tile_name(t, rule) for t in state.wall.dora_indicators()],
        "hands": [
            {
                "concealed": [tile_name(t, rule) for t in h.concealed],
                "concealed_ids": list(h.concealed),
                "melds": [_meld_dict(m, rule) for m in h.melds],
                "river": [
                    {"tile": tile_name(rt.tile, rule), "id": rt.tile,
                     "tsumogiri": rt.tsumogiri, "riichi": rt.riichi, "called": rt.called}
                    for rt in h.river
                ],
                "riichi": h.riichi,
                "ippatsu": h.ippatsu,
                "shanten": h.shanten,
            }
            for h in state.hands
        ],
        "events": [
            {"type": EV_NAMES[t], "actor": a, "tile": tile}
            for t, a, tile in state.events()
        ],
        "results": [_result_dict(r) for r in state.results],
        "legal": list(state.legal),
    }


def _result_dict(r: KyokuResult) -> dict:
    return {
        "kyoku": r.kyoku,
        "honba": r.honba,
        "kind": r.kind,
        "winners": list(r.winners),
        "loser": r.loser,
        "tenpai": list(r.tenpai),
        "settlements": [
            {"deltas": list(s.deltas), "honba": s.honba_component,
             "deposits": s.deposits_claimed}
            for s in r.settlements
        ],
        "win_details": [
            {
                "yaku": [[y, h] for y, h in w.yaku.entries],
                "yakuman": w.yaku.yakuman_count,
                "han": w.han,
                "fu": w.fu,
                "base": w.base,
                "dora": w.dora,
                "ura": w.ura,
                "reds": w.reds,
                "form": w.form,
            }
            for w in r.win_details
        ],
        "scores_after": list(r.scores_after),
    }


def state_fingerprint(state: GameState) -> str:
    blob = json.dumps(serialize_state(state), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()
