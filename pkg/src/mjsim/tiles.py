"""Tile identities, kinds, red fives, and wall construction.

Tiles are ints 0..135; four copies per kind, kind = id // 4.  Kinds are
0..8 = 1m..9m, 9..17 = 1p..9p, 18..26 = 1s..9s, 27..33 = E S W N P F C
(white, green, red dragon).  Copy 0 of each five (ids 16, 52, 88) is the
red five under the red rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import rng as _rng

NUM_TILES = 136
NUM_KINDS = 34

RULE_RED = 0
RULE_NO_RED = 1
RULE_NAMES = {RULE_RED: "red", RULE_NO_RED: "no-red"}

EAST, SOUTH, WEST, NORTH = 27, 28, 29, 30
WHITE, GREEN, RED = 31, 32, 33
WINDS = (EAST, SOUTH, WEST, NORTH)
DRAGONS = (WHITE, GREEN, RED)

RED_FIVE_TILES = (16, 52, 88)  # copy 0 of kinds 4, 13, 22
RED_FIVE_KINDS = (4, 13, 22)

# dead wall occupies the last 14 shuffled positions
DEAD_WALL_START = 122
DORA_INDICATOR_SLOTS = tuple(DEAD_WALL_START + 2 * i for i in range(5))
URA_INDICATOR_SLOTS = tuple(DEAD_WALL_START + 2 * i + 1 for i in range(5))
MAX_KAN_DRAWS = 4

_HONOR_LETTERS = "ESWNPFC"
_HONOR_IDEOGRAMS = "東南西北白發中"
_SUIT_IDEOGRAMS = {"m": "萬", "p": "筒", "s": "索"}


class ContractError(ValueError):
    """Raised when a caller violates an operation precondition."""


def kind_of(tile: int) -> int:
    if not 0 <= tile <= 135:
        raise ContractError(f"tile id out of range: {tile}")
    return tile >> 2


def is_red(tile: int, rule: int) -> bool:
    return rule == RULE_RED and tile in RED_FIVE_TILES


def is_honor(kind: int) -> bool:
    return kind >= 27

def is_terminal(kind: int) -> bool:
    return kind < 27 and kind % 9 in (0, 8)

def is_terminal_or_honor(kind: int) -> bool:
    return kind >= 27 or kind % 9 in (0, 8)


ORPHAN_KINDS = tuple(k for k in range(NUM_KINDS) if is_terminal_or_honor(k))
GREEN_KINDS = (19, 20, 21, 23, 25, GREEN)  # 2s 3s 4s 6s 8s + green dragon


def kind_name(kind: int) -> str:
    if kind < 27:
        return f"{kind % 9 + 1}{'mps'[kind // 9]}"
    return _HONOR_LETTERS[kind - 27]


def tile_name(tile: int, rule: int = RULE_RED) -> str:
    """Text form used in logs and JSON; red fives render as 0m/0p/0s."""
    k = kind_of(tile)
    if is_red(tile, rule):
        return f"0{'mps'[k // 9]}"
    return kind_name(k)


def kind_label(kind: int, locale: str = "en", red: bool = False) -> str:
    """Display label for the renderer; ja locale uses tile ideograms."""
    if locale != "ja":
        if red:
            return f"0{'mps'[kind // 9]}"
        return kind_name(kind)
    if kind < 27:
        return f"{kind % 9 + 1}{_SUIT_IDEOGRAMS['mps'[kind // 9]]}"
    return _HONOR_IDEOGRAMS[kind - 27]


def kind_from_name(name: str) -> tuple[int, bool]:
    """Inverse of tile text encoding; returns (kind, is_red_five)."""
    if name in _HONOR_LETTERS:
        return 27 + _HONOR_LETTERS.index(name), False
    if len(name) == 2 and name[1] in "mps":
        num = int(name[0])
        suit = "mps".index(name[1])
        if num == 0:
            return suit * 9 + 4, True
        if 1 <= num <= 9:
            return suit * 9 + num - 1, False
    raise ContractError(f"bad tile name: {name}")


def dora_kind_for_indicator(indicator_kind: int) -> int:
    """Successor of the indicator: 9 wraps to 1 within a suit, N to E, C to P."""
    if indicator_kind < 27:
        base = indicator_kind - indicator_kind % 9
        return base + (indicator_kind % 9 + 1) % 9
    if indicator_kind < 31:
        return 27 + (indicator_kind - 27 + 1) % 4
    return 31 + (indicator_kind - 31 + 1) % 3


@dataclass(frozen=True, slots=True)
class Wall:
    """Shuffled tile order plus draw cursors.

    Live draws advance `cursor`; kan replacements are taken from the tail
    of the dead wall and shrink the live wall by one tile each, so the
    last live index is 121 - kan_draws.
    """

    tiles: tuple[int, ...]
    cursor: int = 0
    kan_draws: int = 0
    dora_count: int = 1

    def live_remaining(self) -> int:
        return DEAD_WALL_START - self.kan_draws - self.cursor

    def dora_indicators(self) -> tuple[int, ...]:
        return tuple(self.tiles[s] for s in DORA_INDICATOR_SLOTS[: self.dora_count])

    def ura_indicators(self) -> tuple[int, ...]:
        return tuple(self.tiles[s] for s in URA_INDICATOR_SLOTS[: self.dora_count])


def new_wall(state: _rng.RngState) -> tuple[Wall, _rng.RngState]:
    order, state = _rng.shuffle(state, list(range(NUM_TILES)))
    return Wall(tiles=tuple(order)), state
