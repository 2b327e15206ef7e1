"""The kyoku/game state machine as a pure transition function.

`apply_action` validates against the cached legal mask, applies the
action on a throwaway mutable builder, auto-advances through everything
that needs no decision (draws, call-queue bookkeeping, settlements, the
next deal), and freezes a new GameState whose mask is ready for the next
decision maker.
"""

from __future__ import annotations

from .. import actions as A
from ..melds import CHI, KAN_ADDED, KAN_CLOSED, KAN_OPEN, PON, Meld
from ..rng import seed_state
from ..scoring import (
    NoYakuError,
    RON,
    Settlement,
    TSUMO,
    WinContext,
    score_win,
    settle,
)
from ..tiles import (
    MAX_KAN_DRAWS,
    NUM_TILES,
    ORPHAN_KINDS,
    RED_FIVE_KINDS,
    RED_FIVE_TILES,
    RULE_RED,
    ContractError,
    Wall,
    is_red,
    new_wall,
)
from ..hand.shanten import POW5_HONOR, POW5_SUIT, shanten_codes, waits as hand_waits
from .state import hand_add, hand_remove, make_hand
from .types import (
    EV_DISCARD,
    EV_DRAW,
    EV_DRAW_END,
    EV_KAN_ADDED,
    EV_KAN_CLOSED,
    EV_KAN_OPEN,
    EV_NEW_DORA,
    EV_RIICHI,
    EV_RON,
    EV_TSUMO,
    EV_CHI,
    EV_PON,
    GameConfig,
    GameState,
    HandState,
    IllegalActionError,
    KyokuResult,
    MODE_SINGLE,
    PH_ACT,
    PH_CALL,
    PH_GAME_END,
    RIICHI_STICK,
    RiverTile,
    STAGE_CHI,
    STAGE_PONKAN,
    STAGE_RON,
    START_SCORE,
)

_STATE_FIELDS = (
    "config", "wall", "hands", "scores", "kyoku", "honba", "deposits",
    "repeats", "phase", "actor", "drawn", "riichi_pending", "rinshan_pending",
    "call_tile", "call_from", "call_queue", "call_rons", "call_chankan",
    "kakan_kind", "pending_dora", "four_kan_pending", "any_call_made",
    "events_head", "events_len", "rng", "step_count", "terminated",
    "truncated", "results",
)


class _B:
    """Mutable scratch copy of a GameState during one transition."""

    __slots__ = _STATE_FIELDS

    def __init__(self, state: GameState):
        for f in _STATE_FIELDS:
            setattr(self, f, getattr(state, f))
        self.hands = list(state.hands)
        self.scores = list(state.scores)

    @property
    def dealer(self) -> int:
        return self.kyoku % 4

    @property
    def round_wind(self) -> int:
        return 28 if self.kyoku >= 4 else 27

    def seat_wind(self, seat: int) -> int:
        return 27 + (seat - self.dealer) % 4

    def emit(self, ev_type: int, actor: int, tile: int = -1) -> None:
        self.events_head = ((ev_type, actor, tile), self.events_head)
        self.events_len += 1


def _finish(b: _B) -> GameState:
    if b.terminated or b.truncated:
        mask, legal = 0, ()
    else:
        mask, legal = _compute_legal(b)
    return GameState(
        config=b.config, wall=b.wall, hands=tuple(b.hands), scores=tuple(b.scores),
        kyoku=b.kyoku, honba=b.honba, deposits=b.deposits, repeats=b.repeats,
        phase=b.phase, actor=b.actor, drawn=b.drawn,
        riichi_pending=b.riichi_pending, rinshan_pending=b.rinshan_pending,
        call_tile=b.call_tile, call_from=b.call_from, call_queue=b.call_queue,
        call_rons=b.call_rons, call_chankan=b.call_chankan, kakan_kind=b.kakan_kind,
        pending_dora=b.pending_dora, four_kan_pending=b.four_kan_pending,
        any_call_made=b.any_call_made, events_head=b.events_head,
        events_len=b.events_len, rng=b.rng, step_count=b.step_count,
        terminated=b.terminated, truncated=b.truncated, results=b.results,
        legal_mask=mask, legal=legal,
    )


# ---------------------------------------------------------------------------
# game and kyoku setup

def new_game(config: GameConfig, seed: int) -> GameState:
    """Deal the first kyoku; dealer has drawn and must act."""
    b = _B(GameState(
        config=config, wall=Wall(tuple(range(NUM_TILES))),
        hands=(None, None, None, None), scores=(START_SCORE,) * 4,
        rng=seed_state(seed),
    ))
    _start_kyoku(b)
    return _finish(b)


def _start_kyoku(b: _B) -> None:
    wall, b.rng = new_wall(b.rng)
    dealer = b.dealer
    order = [(dealer + i) % 4 for i in range(4)]
    dealt = {s: [] for s in order}
    pos = 0
    for _ in range(3):
        for s in order:
            dealt[s].extend(wall.tiles[pos:pos + 4])
            pos += 4
    for s in order:
        dealt[s].append(wall.tiles[pos])
        pos += 1
    b.hands = [make_hand(dealt[s]) for s in range(4)]
    b.wall = Wall(wall.tiles, cursor=pos, kan_draws=0, dora_count=1)
    b.riichi_pending = False
    b.rinshan_pending = False
    b.call_tile = b.call_from = -1
    b.call_queue = ()
    b.call_rons = ()
    b.call_chankan = False
    b.kakan_kind = -1
    b.pending_dora = 0
    b.four_kan_pending = False
    b.any_call_made = False
    _draw(b, dealer)


def _draw(b: _B, seat: int) -> None:
    hand = b.hands[seat]
    if hand.temp_furiten:
        hand = _replace_flags(hand, temp_furiten=False)
    tile = b.wall.tiles[b.wall.cursor]
    b.wall = Wall(b.wall.tiles, b.wall.cursor + 1, b.wall.kan_draws, b.wall.dora_count)
    b.hands[seat] = hand_add(hand, tile)
    b.drawn = tile
    b.rinshan_pending = False
    b.phase = PH_ACT
    b.actor = seat
    b.emit(EV_DRAW, seat, tile)


def _rinshan_draw(b: _B, seat: int) -> None:
    tile = b.wall.tiles[NUM_TILES - 1 - b.wall.kan_draws]
    b.wall = Wall(b.wall.tiles, b.wall.cursor, b.wall.kan_draws + 1, b.wall.dora_count)
    b.hands[seat] = hand_add(b.hands[seat], tile)
    b.drawn = tile
    b.rinshan_pending = True
    b.phase = PH_ACT
    b.actor = seat
    b.emit(EV_DRAW, seat, tile)


def _replace_flags(hand: HandState, **flags) -> HandState:
    vals = dict(
        concealed=hand.concealed, counts=hand.counts, codes=hand.codes,
        melds=hand.melds, river=hand.river, riichi=hand.riichi,
        riichi_index=hand.riichi_index, ippatsu=hand.ippatsu,
        temp_furiten=hand.temp_furiten, perm_furiten=hand.perm_furiten,
        shanten=hand.shanten, waits=hand.waits,
    )
    vals.update(flags)
    return HandState(**vals)


# ---------------------------------------------------------------------------
# legality

def legal_actions(state: GameState) -> tuple[int, ...]:
    """Cached legal action ids; raises on terminal states."""
    if state.terminated or state.truncated:
        raise ContractError("terminal state has no legal actions")
    return state.legal


def _shanten_minus_kind(hand: HandState, kind: int) -> int:
    """Combined shanten of the hand after removing one tile of `kind`."""
    cm, cp, cs, cz = hand.codes
    counts = bytearray(hand.counts)
    counts[kind] -= 1
    if kind < 9:
        cm -= POW5_SUIT[kind]
    elif kind < 18:
        cp -= POW5_SUIT[kind - 9]
    elif kind < 27:
        cs -= POW5_SUIT[kind - 18]
    else:
        cz -= POW5_HONOR[kind - 27]
    return shanten_codes(cm, cp, cs, cz, counts, len(hand.melds))


def _discard_bits(hand: HandState, rule: int, only_tenpai: bool) -> list[int]:
    out = []
    for kind in range(34):
        c = hand.counts[kind]
        if c == 0:
            continue
        if only_tenpai and _shanten_minus_kind(hand, kind) != 0:
            continue
        has_red = False
        if rule == RULE_RED and kind in RED_FIVE_KINDS:
            red_id = RED_FIVE_TILES[RED_FIVE_KINDS.index(kind)]
            has_red = red_id in hand.concealed
            if has_red:
                out.append(A.RED_ACTION_BY_KIND[kind])
        if c > (1 if has_red else 0):
            out.append(kind)
    return out


def _kan_draw_ok(b: _B) -> bool:
    return b.wall.live_remaining() >= 1 and b.wall.kan_draws < MAX_KAN_DRAWS


def _compute_legal(b: _B) -> tuple[int, tuple[int, ...]]:
    if b.phase == PH_CALL:
        ids = _legal_call(b)
    else:
        ids = _legal_act(b)
    ids.sort()
    mask = 0
    for a in ids:
        mask |= 1 << a
    return mask, tuple(ids)


def _legal_act(b: _B) -> list[int]:
    seat = b.actor
    hand = b.hands[seat]
    rule = b.config.rule

    if b.riichi_pending:
        return _discard_bits(hand, rule, only_tenpai=True)

    if hand.riichi:
        ids = []
        if _can_tsumo(b, seat):
            ids.append(A.TSUMO)
        kind = b.drawn >> 2
        if is_red(b.drawn, rule):
            ids.append(A.RED_ACTION_BY_KIND[kind])
        else:
            ids.append(kind)
        if hand.counts[kind] == 4 and _kan_draw_ok(b) and _kan_keeps_waits(hand, kind):
            ids.append(A.KAN_CLOSED_BASE + kind)
        return ids

    ids = _discard_bits(hand, rule, only_tenpai=False)
    if b.drawn < 0:
        return ids  # just called a meld: the turn allows only the discard
    if (hand.riichi == 0 and hand.is_closed() and b.scores[seat] >= RIICHI_STICK
            and b.wall.live_remaining() >= 4 and hand.shanten <= 0):
        ids.append(A.RIICHI)
    if _can_tsumo(b, seat):
        ids.append(A.TSUMO)
    if _kan_draw_ok(b):
        for kind in range(34):
            if hand.counts[kind] == 4:
                ids.append(A.KAN_CLOSED_BASE + kind)
        pon_kinds = {m.base_kind for m in hand.melds if m.type == PON}
        for kind in pon_kinds:
            if hand.counts[kind] >= 1:
                ids.append(A.KAN_ADDED_BASE + kind)
    if (rule == RULE_RED and not b.any_call_made and not hand.river
            and not hand.melds
            and sum(1 for k in ORPHAN_KINDS if hand.counts[k]) >= 9):
        ids.append(A.ABORT_NINE_TERMINALS)
    return ids


def _legal_call(b: _B) -> list[int]:
    seat, stage = b.call_queue[0]
    hand = b.hands[seat]
    kind = b.call_tile >> 2
    ids = [A.PASS]
    if stage == STAGE_RON:
        ids.append(A.RON)
    elif stage == STAGE_PONKAN:
        ids.append(A.PON)
        if hand.counts[kind] >= 3 and _kan_draw_ok(b):
            ids.append(A.KAN_OPEN)
    else:
        n = kind % 9
        if n <= 6 and hand.counts[kind + 1] and hand.counts[kind + 2]:
            ids.append(A.CHI_LOW)
        if 1 <= n <= 7 and hand.counts[kind - 1] and hand.counts[kind + 1]:
            ids.append(A.CHI_MID)
        if n >= 2 and hand.counts[kind - 2] and hand.counts[kind - 1]:
            ids.append(A.CHI_HIGH)
    return ids


def _kan_keeps_waits(hand: HandState, kind: int) -> bool:
    """A closed kan during riichi must not change the winning tiles."""
    before = bytearray(hand.counts)
    before[kind] -= 1  # waits of the 13-tile hand as it was before the draw
    old = hand_waits(bytes(before), len(hand.melds))
    after = bytearray(hand.counts)
    after[kind] -= 4
    new = hand_waits(bytes(after), len(hand.melds) + 1)
    return old == new and kind not in old


# ---------------------------------------------------------------------------
# win evaluation helpers

def _win_context(b: _B, seat: int, win_tile: int, win_type: str,
                 chankan: bool = False) -> WinContext:
    hand = b.hands[seat]
    if win_type == TSUMO:
        counts = hand.counts
        concealed_ids = hand.concealed
        last = b.wall.live_remaining() == 0 and not b.rinshan_pending
        rinshan = b.rinshan_pending
        first = (not hand.river and not b.any_call_made and not hand.melds
                 and not rinshan)
    else:
        c = bytearray(hand.counts)
        c[win_tile >> 2] += 1
        counts = bytes(c)
        concealed_ids = hand.concealed + (win_tile,)
        last = b.wall.live_remaining() == 0 and not chankan
        rinshan = False
        first = False
    all_ids = list(concealed_ids)
    for m in hand.melds:
        all_ids.extend(m.tiles)
    return WinContext(
        concealed=counts, melds=hand.melds, win_tile=win_tile, win_type=win_type,
        seat_wind=b.seat_wind(seat), round_wind=b.round_wind,
        all_tile_ids=tuple(all_ids), riichi=hand.riichi, ippatsu=hand.ippatsu,
        is_last_tile=last, is_rinshan=rinshan, is_chankan=chankan,
        is_first_uninterrupted_draw=first,
        dora_indicators=b.wall.dora_indicators(),
        ura_indicators=b.wall.ura_indicators() if hand.riichi else (),
        rule=b.config.rule,
    )


def _try_score(b: _B, seat: int, win_tile: int, win_type: str, chankan: bool = False):
    ctx = _win_context(b, seat, win_tile, win_type, chankan)
    try:
        return score_win(ctx, b.config.kazoe, b.config.double_yakuman)
    except NoYakuError:
        return None


def _can_tsumo(b: _B, seat: int) -> bool:
    hand = b.hands[seat]
    if hand.shanten != -1:
        return False
    return _try_score(b, seat, b.drawn, TSUMO) is not None


def _can_ron(b: _B, seat: int, tile: int, chankan: bool = False) -> bool:
    hand = b.hands[seat]
    if hand.shanten != 0 or (tile >> 2) not in hand.waits:
        return False
    if hand.furiten():
        return False
    return _try_score(b, seat, tile, RON, chankan) is not None


# ---------------------------------------------------------------------------
# transitions

def apply_action(state: GameState, action: int) -> GameState:
    """Apply one legal action; raises IllegalActionError on a masked-off id
    and ContractError on terminal states."""
    if state.terminated or state.truncated:
        raise ContractError("cannot act on a terminal state")
    if not 0 <= action < A.NUM_ACTIONS or not (state.legal_mask >> action) & 1:
        raise IllegalActionError(f"action {action} is not legal here")
    b = _B(state)
    b.step_count += 1

    if b.phase == PH_CALL:
        _apply_call_action(b, action)
    else:
        _apply_turn_action(b, action)

    if not b.terminated and b.step_count >= b.config.max_steps:
        b.truncated = True
    return _finish(b)


def _apply_turn_action(b: _B, action: int) -> None:
    seat = b.actor
    if action <= 36:
        _apply_discard(b, seat, action)
    elif action == A.RIICHI:
        b.scores[seat] -= RIICHI_STICK
        b.deposits += 1
        b.riichi_pending = True
        b.emit(EV_RIICHI, seat)
    elif action == A.TSUMO:
        _apply_tsumo(b, seat)
    elif A.KAN_CLOSED_BASE <= action < A.KAN_ADDED_BASE:
        _apply_closed_kan(b, seat, action - A.KAN_CLOSED_BASE)
    elif A.KAN_ADDED_BASE <= action < A.PASS:
        _apply_added_kan(b, seat, action - A.KAN_ADDED_BASE)
    elif action == A.ABORT_NINE_TERMINALS:
        b.emit(EV_DRAW_END, seat)
        _abort_kyoku(b, "abort_nine_terminals")
    else:  # pragma: no cover - masked off
        raise IllegalActionError(f"action {action} invalid in a turn phase")


def _pick_discard_tile(b: _B, hand: HandState, action: int) -> int:
    kind = A.discard_kind(action)
    want_red = action >= A.DISCARD_RED_BASE
    if b.drawn >= 0 and b.drawn >> 2 == kind and is_red(b.drawn, b.config.rule) == want_red:
        return b.drawn
    for t in hand.concealed:
        if t >> 2 == kind and is_red(t, b.config.rule) == want_red:
            return t
    raise IllegalActionError(f"no matching tile for discard action {action}")


def _apply_discard(b: _B, seat: int, action: int) -> None:
    hand = b.hands[seat]
    tile = _pick_discard_tile(b, hand, action)
    tsumogiri = tile == b.drawn

    declaring = b.riichi_pending
    riichi_val = hand.riichi
    riichi_index = hand.riichi_index
    if declaring:
        riichi_val = 2 if (not hand.river and not b.any_call_made) else 1
        riichi_index = len(hand.river)
        b.riichi_pending = False

    ippatsu = hand.ippatsu
    if hand.riichi and not declaring and ippatsu:
        ippatsu = False  # survived one full turn after the declaration

    river = hand.river + (RiverTile(tile, tsumogiri, declaring, False),)
    b.hands[seat] = hand_remove(hand, (tile,), river=river,
                                riichi=riichi_val, riichi_index=riichi_index,
                                ippatsu=ippatsu)
    b.drawn = -1
    b.rinshan_pending = False
    b.emit(EV_DISCARD, seat, tile)

    _reveal_pending_dora(b)
    if not _begin_call_phase(b, tile, seat):
        _mark_passed_furiten(b, tile >> 2, seat)
        _discard_stands(b)


def _reveal_pending_dora(b: _B) -> None:
    while b.pending_dora > 0 and b.wall.dora_count < 5:
        b.wall = Wall(b.wall.tiles, b.wall.cursor, b.wall.kan_draws,
                      b.wall.dora_count + 1)
        b.pending_dora -= 1
        b.emit(EV_NEW_DORA, -1, b.wall.dora_indicators()[-1])
    b.pending_dora = 0


def _begin_call_phase(b: _B, tile: int, discarder: int, chankan: bool = False) -> bool:
    kind = tile >> 2
    queue = []
    for off in (1, 2, 3):
        s = (discarder + off) % 4
        if _can_ron(b, s, tile, chankan):
            queue.append((s, STAGE_RON))
    if not chankan and b.wall.live_remaining() >= 1:
        for off in (1, 2, 3):
            s = (discarder + off) % 4
            hand = b.hands[s]
            if hand.riichi:
                continue
            if hand.counts[kind] >= 2:
                queue.append((s, STAGE_PONKAN))
        s = (discarder + 1) % 4
        hand = b.hands[s]
        if kind < 27 and not hand.riichi:
            n = kind % 9
            can_chi = ((n <= 6 and hand.counts[kind + 1] and hand.counts[kind + 2])
                       or (1 <= n <= 7 and hand.counts[kind - 1] and hand.counts[kind + 1])
                       or (n >= 2 and hand.counts[kind - 2] and hand.counts[kind - 1]))
            if can_chi:
                queue.append((s, STAGE_CHI))
    if not queue:
        return False
    b.phase = PH_CALL
    b.call_tile = tile
    b.call_from = discarder
    b.call_queue = tuple(queue)
    b.call_rons = ()
    b.call_chankan = chankan
    b.actor = queue[0][0]
    return True


def _apply_call_action(b: _B, action: int) -> None:
    seat, stage = b.call_queue[0]
    b.call_queue = b.call_queue[1:]
    if action == A.RON:
        b.call_rons = b.call_rons + (seat,)
        _advance_call_queue(b)
    elif action == A.PASS:
        _advance_call_queue(b)
    elif action == A.PON:
        _apply_pon(b, seat)
    elif action == A.KAN_OPEN:
        _apply_open_kan(b, seat)
    elif action in (A.CHI_LOW, A.CHI_MID, A.CHI_HIGH):
        _apply_chi(b, seat, action)
    else:  # pragma: no cover - masked off
        raise IllegalActionError(f"action {action} invalid in a call phase")


def _advance_call_queue(b: _B) -> None:
    if b.call_rons:
        b.call_queue = tuple(e for e in b.call_queue if e[1] == STAGE_RON)
    if b.call_queue:
        b.actor = b.call_queue[0][0]
        return
    _resolve_call_end(b)


def _resolve_call_end(b: _B) -> None:
    if b.call_rons:
        if len(b.call_rons) >= 3 and b.config.rule == RULE_RED:
            b.emit(EV_DRAW_END, b.call_from)
            _abort_kyoku(b, "abort_triple_ron")
            return
        _apply_ron_wins(b)
        return
    _mark_passed_furiten(b, b.call_tile >> 2, b.call_from)
    if b.call_chankan:
        seat = b.call_from
        b.call_chankan = False
        b.phase = PH_ACT
        b.actor = seat
        _complete_added_kan(b, seat, b.kakan_kind)
        return
    _discard_stands(b)


def _mark_passed_furiten(b: _B, kind: int, discarder: int) -> None:
    # anybody whose waits include the passed tile may not ron until their
    # next draw; riichi hands stay locked out for the whole kyoku
    for s in range(4):
        if s == discarder:
            continue
        hand = b.hands[s]
        if hand.shanten == 0 and kind in hand.waits:
            if hand.riichi:
                b.hands[s] = _replace_flags(hand, perm_furiten=True)
            else:
                b.hands[s] = _replace_flags(hand, temp_furiten=True)


def _discard_stands(b: _B) -> None:
    discarder = b.call_from if b.phase == PH_CALL else b.actor
    b.phase = PH_ACT
    hand = b.hands[discarder]
    if hand.riichi and hand.riichi_index == len(hand.river) - 1 and not hand.ippatsu:
        b.hands[discarder] = _replace_flags(hand, ippatsu=True)
        if b.config.rule == RULE_RED and all(h.riichi for h in b.hands):
            b.emit(EV_DRAW_END, discarder)
            _abort_kyoku(b, "abort_four_riichi")
            return
    if b.four_kan_pending and b.config.rule == RULE_RED:
        b.emit(EV_DRAW_END, discarder)
        _abort_kyoku(b, "abort_four_kan")
        return
    b.call_tile = -1
    b.call_from = -1
    b.call_queue = ()
    b.call_rons = ()
    if b.wall.live_remaining() == 0:
        _resolve_exhaustive(b)
        return
    _draw(b, (discarder + 1) % 4)


def _clear_all_ippatsu(b: _B) -> None:
    for s in range(4):
        if b.hands[s].ippatsu:
            b.hands[s] = _replace_flags(b.hands[s], ippatsu=False)


def _consume_lowest(hand: HandState, kind: int, n: int) -> list[int]:
    out = [t for t in hand.concealed if t >> 2 == kind][:n]
    if len(out) != n:
        raise IllegalActionError(f"not enough copies of kind {kind}")
    return out


def _mark_called_tile(b: _B) -> None:
    discarder = b.call_from
    hand = b.hands[discarder]
    last = hand.river[-1]
    river = hand.river[:-1] + (RiverTile(last.tile, last.tsumogiri, last.riichi, True),)
    b.hands[discarder] = _replace_flags(hand, river=river)


def _check_four_kans(b: _B) -> None:
    if b.config.rule != RULE_RED:
        return
    per_seat = [h.kan_count() for h in b.hands]
    if sum(per_seat) == 4 and sum(1 for c in per_seat if c) >= 2:
        b.four_kan_pending = True


def _apply_pon(b: _B, seat: int) -> None:
    kind = b.call_tile >> 2
    _mark_passed_furiten(b, kind, b.call_from)
    _mark_called_tile(b)
    hand = b.hands[seat]
    used = _consume_lowest(hand, kind, 2)
    meld = Meld(PON, tuple(sorted(used + [b.call_tile])), b.call_tile, b.call_from)
    b.hands[seat] = hand_remove(hand, used, melds=hand.melds + (meld,))
    _finish_meld_call(b, seat)
    b.emit(EV_PON, seat, b.call_tile)
    _clear_call(b)


def _apply_chi(b: _B, seat: int, action: int) -> None:
    kind = b.call_tile >> 2
    if action == A.CHI_LOW:
        need = (kind + 1, kind + 2)
    elif action == A.CHI_MID:
        need = (kind - 1, kind + 1)
    else:
        need = (kind - 2, kind - 1)
    _mark_passed_furiten(b, kind, b.call_from)
    _mark_called_tile(b)
    hand = b.hands[seat]
    used = [_consume_lowest(hand, k, 1)[0] for k in need]
    meld = Meld(CHI, tuple(sorted(used + [b.call_tile])), b.call_tile, b.call_from)
    b.hands[seat] = hand_remove(hand, used, melds=hand.melds + (meld,))
    _finish_meld_call(b, seat)
    b.emit(EV_CHI, seat, b.call_tile)
    _clear_call(b)


def _apply_open_kan(b: _B, seat: int) -> None:
    kind = b.call_tile >> 2
    _mark_passed_furiten(b, kind, b.call_from)
    _mark_called_tile(b)
    hand = b.hands[seat]
    used = _consume_lowest(hand, kind, 3)
    meld = Meld(KAN_OPEN, tuple(sorted(used + [b.call_tile])), b.call_tile, b.call_from)
    b.hands[seat] = hand_remove(hand, used, melds=hand.melds + (meld,))
    b.any_call_made = True
    _clear_all_ippatsu(b)
    b.pending_dora += 1
    b.emit(EV_KAN_OPEN, seat, b.call_tile)
    _clear_call(b)
    _check_four_kans(b)
    _rinshan_draw(b, seat)


def _finish_meld_call(b: _B, seat: int) -> None:
    b.any_call_made = True
    _clear_all_ippatsu(b)
    b.phase = PH_ACT
    b.actor = seat
    b.drawn = -1
    b.rinshan_pending = False


def _clear_call(b: _B) -> None:
    b.call_tile = -1
    b.call_from = -1
    b.call_queue = ()
    b.call_rons = ()
    b.call_chankan = False
    b.kakan_kind = -1


def _apply_closed_kan(b: _B, seat: int, kind: int) -> None:
    hand = b.hands[seat]
    used = _consume_lowest(hand, kind, 4)
    meld = Meld(KAN_CLOSED, tuple(sorted(used)))
    b.hands[seat] = hand_remove(hand, used, melds=hand.melds + (meld,))
    b.any_call_made = True
    _clear_all_ippatsu(b)
    # closed-kan indicators flip immediately; open/added flip after the discard
    b.wall = Wall(b.wall.tiles, b.wall.cursor, b.wall.kan_draws,
                  min(b.wall.dora_count + 1, 5))
    b.emit(EV_KAN_CLOSED, seat, used[0])
    b.emit(EV_NEW_DORA, -1, b.wall.dora_indicators()[-1])
    _check_four_kans(b)
    _rinshan_draw(b, seat)


def _apply_added_kan(b: _B, seat: int, kind: int) -> None:
    hand = b.hands[seat]
    tile = _consume_lowest(hand, kind, 1)[0]
    b.emit(EV_KAN_ADDED, seat, tile)
    # the robbing window: everyone who could ron the added tile is asked
    if _begin_call_phase(b, tile, seat, chankan=True):
        b.kakan_kind = kind
        return
    _mark_passed_furiten(b, kind, seat)
    _complete_added_kan(b, seat, kind)


def _complete_added_kan(b: _B, seat: int, kind: int) -> None:
    hand = b.hands[seat]
    tile = _consume_lowest(hand, kind, 1)[0]
    melds = []
    for m in hand.melds:
        if m.type == PON and m.base_kind == kind:
            melds.append(Meld(KAN_ADDED, tuple(sorted(m.tiles + (tile,))),
                              m.called_tile, m.from_seat))
        else:
            melds.append(m)
    b.hands[seat] = hand_remove(hand, (tile,), melds=tuple(melds))
    b.any_call_made = True
    _clear_all_ippatsu(b)
    b.pending_dora += 1
    _clear_call(b)
    _check_four_kans(b)
    _rinshan_draw(b, seat)


# ---------------------------------------------------------------------------
# kyoku endings

def _apply_tsumo(b: _B, seat: int) -> None:
    ws = _try_score(b, seat, b.drawn, TSUMO)
    if ws is None:  # pragma: no cover - masked off
        raise IllegalActionError("tsumo without a yaku")
    settlement = settle(TSUMO, ws.base, b.dealer, seat, None, b.honba, b.deposits)
    for s in range(4):
        b.scores[s] += settlement.deltas[s]
    b.deposits = 0
    b.emit(EV_TSUMO, seat, b.drawn)
    result = KyokuResult(
        kyoku=b.kyoku, honba=b.honba, kind="tsumo", winners=(seat,),
        settlements=(settlement,), win_details=(ws,),
        scores_after=tuple(b.scores),
    )
    _advance_round(b, result, dealer_repeat=seat == b.dealer,
                   reset_honba=seat != b.dealer)


def _apply_ron_wins(b: _B) -> None:
    loser = b.call_from
    winners = tuple(sorted(b.call_rons, key=lambda s: (s - loser) % 4))
    settlements = []
    details = []
    for i, seat in enumerate(winners):
        ws = _try_score(b, seat, b.call_tile, RON, b.call_chankan)
        if ws is None:  # pragma: no cover - masked off
            raise IllegalActionError("ron without a yaku")
        honba = b.honba if i == 0 else 0
        deposits = b.deposits if i == 0 else 0
        settlement = settle(RON, ws.base, b.dealer, seat, loser, honba, deposits)
        for s in range(4):
            b.scores[s] += settlement.deltas[s]
        settlements.append(settlement)
        details.append(ws)
        b.emit(EV_RON, seat, b.call_tile)
    b.deposits = 0
    result = KyokuResult(
        kyoku=b.kyoku, honba=b.honba, kind="ron", winners=winners, loser=loser,
        settlements=tuple(settlements), win_details=tuple(details),
        scores_after=tuple(b.scores),
    )
    dealer_won = b.dealer in winners
    _clear_call(b)
    _advance_round(b, result, dealer_repeat=dealer_won, reset_honba=not dealer_won)


def _resolve_exhaustive(b: _B) -> None:
    b.emit(EV_DRAW_END, -1)
    tenpai = tuple(s for s in range(4) if b.hands[s].shanten == 0)
    n = len(tenpai)
    deltas = [0, 0, 0, 0]
    if 0 < n < 4:
        gain = 3000 // n
        loss = 3000 // (4 - n)
        for s in range(4):
            deltas[s] = gain if s in tenpai else -loss
    for s in range(4):
        b.scores[s] += deltas[s]
    result = KyokuResult(
        kyoku=b.kyoku, honba=b.honba, kind="exhaustive", tenpai=tenpai,
        settlements=(Settlement(tuple(deltas), 0, 0),), scores_after=tuple(b.scores),
    )
    _advance_round(b, result, dealer_repeat=b.dealer in tenpai, reset_honba=False)


def _abort_kyoku(b: _B, kind: str) -> None:
    # deposits staked this kyoku go back to their owners
    for s in range(4):
        if b.hands[s].riichi:
            b.scores[s] += RIICHI_STICK
            b.deposits -= 1
    result = KyokuResult(
        kyoku=b.kyoku, honba=b.honba, kind=kind, scores_after=tuple(b.scores),
    )
    _clear_call(b)
    _advance_round(b, result, dealer_repeat=True, reset_honba=False)


def _advance_round(b: _B, result: KyokuResult, dealer_repeat: bool,
                   reset_honba: bool) -> None:
    b.results = b.results + (result,)
    b.drawn = -1
    cfg = b.config

    if dealer_repeat and b.repeats >= cfg.renchan_cap:
        dealer_repeat = False
    if dealer_repeat:
        b.repeats += 1

    bankrupt = any(s < 0 for s in b.scores)
    next_honba = 0 if reset_honba else b.honba + 1

    if cfg.mode == MODE_SINGLE or bankrupt:
        _end_game(b)
        return
    if dealer_repeat:
        if (b.kyoku == cfg.final_kyoku and cfg.agari_yame
                and _leader(b.scores) == b.dealer):
            _end_game(b)
            return
        b.honba = next_honba
        _start_kyoku(b)
        return
    if b.kyoku + 1 > cfg.final_kyoku:
        _end_game(b)
        return
    b.kyoku += 1
    b.honba = next_honba
    _start_kyoku(b)


def _leader(scores) -> int:
    return min(range(4), key=lambda s: (-scores[s], s))


def _end_game(b: _B) -> None:
    b.phase = PH_GAME_END
    b.terminated = True
    b.call_queue = ()


def final_ranks(scores) -> tuple[int, int, int, int]:
    """ranks[seat] = 0..3; ties break toward the earlier seat."""
    order = sorted(range(4), key=lambda s: (-scores[s], s))
    ranks = [0, 0, 0, 0]
    for pos, seat in enumerate(order):
        ranks[seat] = pos
    return tuple(ranks)
