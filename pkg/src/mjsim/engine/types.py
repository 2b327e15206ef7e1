"""Engine value types: configuration, hand state, game state, events."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..melds import Meld
from ..rng import RngState
from ..tiles import EAST, RULE_RED, SOUTH, Wall
from ..scoring.points import Settlement

MODE_SINGLE = 0
MODE_EAST = 1
MODE_HALF = 2
MODE_NAMES = {MODE_SINGLE: "single", MODE_EAST: "east", MODE_HALF: "half"}

PH_ACT = 0
PH_CALL = 1
PH_GAME_END = 2

# call-queue stages, in priority order
STAGE_RON = 0
STAGE_PONKAN = 1
STAGE_CHI = 2

EV_DRAW = 0
EV_DISCARD = 1
EV_CHI = 2
EV_PON = 3
EV_KAN_OPEN = 4
EV_KAN_CLOSED = 5
EV_KAN_ADDED = 6
EV_RIICHI = 7
EV_RON = 8
EV_TSUMO = 9
EV_DRAW_END = 10
EV_NEW_DORA = 11
EV_NAMES = ("draw", "discard", "chi", "pon", "kan_open", "kan_closed",
            "kan_added", "riichi", "ron", "tsumo", "draw_end", "new_dora")

START_SCORE = 25_000
RIICHI_STICK = 1_000


class IllegalActionError(ValueError):
    """The action bit is not set in the current legal mask."""


@dataclass(frozen=True, slots=True)
class GameConfig:
    rule: int = RULE_RED
    mode: int = MODE_SINGLE
    kazoe: bool = False  # counted yakuman at 13+ han
    double_yakuman: bool = False  # special waits worth two yakuman
    agari_yame: bool = True  # leader dealer may end the game at the last kyoku
    max_steps: int = 10_000
    renchan_cap: int = 32  # forced dealer rotation after this many repeats

    @property
    def final_kyoku(self) -> int:
        return 0 if self.mode == MODE_SINGLE else (3 if self.mode == MODE_EAST else 7)


@dataclass(frozen=True, slots=True)
class RiverTile:
    tile: int
    tsumogiri: bool = False
    riichi: bool = False  # the riichi declaration discard
    called: bool = False  # claimed into an opponent meld


@dataclass(frozen=True, slots=True)
class HandState:
    """One seat's tiles and status flags.

    `shanten` and `waits` are kept in sync with `concealed` on every
    rebuild; `waits` is only materialized for 13-tile-form tenpai hands.
    """

    concealed: tuple[int, ...]  # sorted tile ids
    counts: bytes  # 34 kind counts
    codes: tuple[int, int, int, int]  # base-5 suit codes (m, p, s, z)
    melds: tuple[Meld, ...] = ()
    river: tuple[RiverTile, ...] = ()
    riichi: int = 0  # 0 none, 1 riichi, 2 double riichi
    riichi_index: int = -1  # river index of the declaration discard
    ippatsu: bool = False
    temp_furiten: bool = False
    perm_furiten: bool = False
    shanten: int = 8
    waits: tuple[int, ...] = ()

    def furiten(self) -> bool:
        """May not ron: a wait sits in the own river, or one was passed up."""
        if self.temp_furiten or self.perm_furiten:
            return True
        if self.waits:
            river_kinds = {rt.tile >> 2 for rt in self.river}
            return any(w in river_kinds for w in self.waits)
        return False

    def kan_count(self) -> int:
        return sum(1 for m in self.melds if m.is_kan())

    def is_closed(self) -> bool:
        return all(not m.is_open() for m in self.melds)


@dataclass(frozen=True, slots=True)
class KyokuResult:
    """Outcome of one kyoku, kept for logs, rewards, and the UI."""

    kyoku: int
    honba: int
    kind: str  # tsumo | ron | exhaustive | abort_*
    winners: tuple[int, ...] = ()
    loser: int = -1
    settlements: tuple[Settlement, ...] = ()
    win_details: tuple = ()  # WinScore per winner, in `winners` order
    tenpai: tuple[int, ...] = ()  # seats revealing tenpai at an exhaustive draw
    scores_after: tuple[int, int, int, int] = (0, 0, 0, 0)


@dataclass(frozen=True, slots=True)
class GameState:
    """Whole-game value; transitions never mutate, they build a new state."""

    config: GameConfig
    wall: Wall
    hands: tuple[HandState, HandState, HandState, HandState]
    scores: tuple[int, int, int, int]
    kyoku: int = 0
    honba: int = 0
    deposits: int = 0
    repeats: int = 0
    phase: int = PH_ACT
    actor: int = 0
    drawn: int = -1  # tile id drawn this turn, -1 outside a draw turn
    riichi_pending: bool = False
    rinshan_pending: bool = False  # current drawn tile came off a kan
    call_tile: int = -1
    call_from: int = -1
    call_queue: tuple[tuple[int, int], ...] = ()
    call_rons: tuple[int, ...] = ()
    call_chankan: bool = False
    kakan_kind: int = -1  # added-kan kind awaiting the chankan window
    pending_dora: int = 0  # kan indicators revealed after the next discard
    four_kan_pending: bool = False
    any_call_made: bool = False
    events_head: tuple | None = None  # cons list of (type, actor, tile)
    events_len: int = 0
    rng: RngState = field(default=RngState(0, 0))
    step_count: int = 0
    terminated: bool = False
    truncated: bool = False
    results: tuple[KyokuResult, ...] = ()
    legal_mask: int = 0
    legal: tuple[int, ...] = ()

    @property
    def dealer(self) -> int:
        return self.kyoku % 4

    @property
    def round_wind(self) -> int:
        return SOUTH if self.kyoku >= 4 else EAST

    def seat_wind(self, seat: int) -> int:
        return 27 + (seat - self.dealer) % 4

    def events(self) -> list[tuple[int, int, int]]:
        """Event list in chronological order."""
        out = []
        node = self.events_head
        while node is not None:
            out.append(node[0])
            node = node[1]
        out.reverse()
        return out
