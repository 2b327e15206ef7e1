"""Ego-centric tokenized observations.

Tile tokens are kind ids 0..33, with red fives mapped to 34/35/36 and 37
as padding.  Event tokens are (type, relative actor, tile token) triples
with the observer at relative seat 0; opponents' drawn tiles are hidden
behind the pad token, and nothing else in the view depends on hidden
information.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..engine.types import (
    EV_DRAW,
    EV_RON,
    EV_TSUMO,
    GameState,
)
from ..tiles import RED_FIVE_TILES, RULE_RED

PAD_TOKEN = 37
EVENT_WINDOW = 64

# observation event vocabulary (0..10): engine win events share one token
_EV_TOKEN = {
    0: 0,   # draw
    1: 1,   # discard
    2: 2,   # chi
    3: 3,   # pon
    4: 4,   # kan_open
    5: 5,   # kan_closed
    6: 6,   # kan_added
    7: 7,   # riichi
    EV_RON: 8,
    EV_TSUMO: 8,
    10: 9,  # draw_end
    11: 10,  # new_dora
}
PAD_EVENT = (0, 0, PAD_TOKEN)


def tile_token(tile: int, rule: int) -> int:
    if rule == RULE_RED and tile in RED_FIVE_TILES:
        return 34 + RED_FIVE_TILES.index(tile)
    return tile >> 2


@dataclass(frozen=True)
class Observation:
    hand_tokens: tuple[int, ...]  # 14 slots, padded
    event_tokens: tuple[tuple[int, int, int], ...]  # 64 slots, oldest padded
    shanten: int
    scores: tuple[int, int, int, int]  # points / 100, observer first
    round_wind: int
    seat_wind: int
    kyoku: int
    honba: int
    deposits: int
    dora_indicator_tokens: tuple[int, ...]  # 5 slots, padded
    live_wall: int
    riichi_flags: tuple[int, int, int, int]  # observer first

    def to_dict(self) -> dict:
        return {
            "hand_tokens": list(self.hand_tokens),
            "event_tokens": [list(e) for e in self.event_tokens],
            "shanten": self.shanten,
            "scores": list(self.scores),
            "round_wind": self.round_wind,
            "seat_wind": self.seat_wind,
            "kyoku": self.kyoku,
            "honba": self.honba,
            "deposits": self.deposits,
            "dora_indicator_tokens": list(self.dora_indicator_tokens),
            "live_wall": self.live_wall,
            "riichi_flags": list(self.riichi_flags),
        }


def observe(state, seat: int) -> Observation:
    """Tokenized view for one seat; accepts an EnvState or a GameState."""
    game: GameState = state.game if hasattr(state, "game") else state
    if not 0 <= seat <= 3:
        raise ValueError(f"bad seat {seat}")
    rule = game.config.rule
    hand = game.hands[seat]

    tokens = sorted(tile_token(t, rule) for t in hand.concealed)
    hand_tokens = tuple(tokens) + (PAD_TOKEN,) * (14 - len(tokens))

    events = []
    node = game.events_head
    while node is not None and len(events) < EVENT_WINDOW:
        ev_type, actor, tile = node[0]
        rel = (actor - seat) % 4 if actor >= 0 else 0
        if ev_type == EV_DRAW and actor != seat:
            tok = PAD_TOKEN  # opponents' draws are face down
        elif tile >= 0:
            tok = tile_token(tile, rule)
        else:
            tok = PAD_TOKEN
        events.append((_EV_TOKEN[ev_type], rel, tok))
        node = node[1]
    events.reverse()
    event_tokens = (PAD_EVENT,) * (EVENT_WINDOW - len(events)) + tuple(events)

    dora = tuple(tile_token(t, rule) for t in game.wall.dora_indicators())
    dora += (PAD_TOKEN,) * (5 - len(dora))

    return Observation(
        hand_tokens=hand_tokens,
        event_tokens=event_tokens,
        shanten=hand.shanten,
        scores=tuple(game.scores[(seat + i) % 4] // 100 for i in range(4)),
        round_wind=game.round_wind,
        seat_wind=game.seat_wind(seat),
        kyoku=game.kyoku,
        honba=game.honba,
        deposits=game.deposits,
        dora_indicator_tokens=dora,
        live_wall=game.wall.live_remaining(),
        riichi_flags=tuple(1 if game.hands[(seat + i) % 4].riichi else 0 for i in range(4)),
    )
