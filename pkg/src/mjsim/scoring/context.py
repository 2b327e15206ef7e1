"""Win-evaluation inputs and outputs."""

from __future__ import annotations

from dataclasses import dataclass

from ..melds import Meld
from ..tiles import RULE_RED

TSUMO = "tsumo"
RON = "ron"


class NoYakuError(ValueError):
    """The hand shape wins but carries no yaku (dora alone never qualifies)."""


@dataclass(frozen=True)
class WinContext:
    """Everything needed to value one win.

    `concealed` counts include the winning tile (also for ron, where it is
    the virtual fourteenth tile); `all_tile_ids` lists concealed plus meld
    tile ids so red fives stay countable.
    """

    concealed: bytes  # counts34 including the win tile
    melds: tuple[Meld, ...]
    win_tile: int
    win_type: str  # TSUMO | RON
    seat_wind: int  # 27..30
    round_wind: int  # 27 | 28
    all_tile_ids: tuple[int, ...]
    riichi: int = 0  # 0 none, 1 riichi, 2 double riichi
    ippatsu: bool = False
    is_last_tile: bool = False  # haitei draw / houtei discard
    is_rinshan: bool = False
    is_chankan: bool = False
    is_first_uninterrupted_draw: bool = False
    dora_indicators: tuple[int, ...] = ()
    ura_indicators: tuple[int, ...] = ()
    rule: int = RULE_RED

    def __post_init__(self):
        if self.win_type not in (TSUMO, RON):
            raise ValueError(f"bad win type {self.win_type!r}")
        if self.ura_indicators and not self.riichi:
            raise ValueError("ura indicators only apply to riichi wins")

    @property
    def is_closed(self) -> bool:
        return all(not m.is_open() for m in self.melds)

    @property
    def win_kind(self) -> int:
        return self.win_tile >> 2


@dataclass(frozen=True)
class YakuList:
    """Detected yaku with han values; yakuman entries carry their count
    in `yakuman_count` and han 0."""

    entries: tuple[tuple[int, int], ...] = ()
    yakuman_count: int = 0

    @property
    def han(self) -> int:
        return sum(h for _, h in self.entries)

    def has(self, yaku_id: int) -> bool:
        return any(y == yaku_id for y, _ in self.entries)
