"""Called-set value type shared by the engine, hand evaluation, and scoring."""

from __future__ import annotations

from dataclasses import dataclass

CHI = 0
PON = 1
KAN_OPEN = 2
KAN_CLOSED = 3
KAN_ADDED = 4

MELD_NAMES = {CHI: "chi", PON: "pon", KAN_OPEN: "kan_open",
              KAN_CLOSED: "kan_closed", KAN_ADDED: "kan_added"}


@dataclass(frozen=True, slots=True)
class Meld:
    type: int
    tiles: tuple[int, ...]  # tile ids, sorted
    called_tile: int = -1  # claimed discard / added tile, -1 for closed kan
    from_seat: int = -1

    @property
    def base_kind(self) -> int:
        """Lowest kind in the set (run start, or the triplet/kan kind)."""
        return self.tiles[0] >> 2

    def is_kan(self) -> bool:
        return self.type in (KAN_OPEN, KAN_CLOSED, KAN_ADDED)

    def is_open(self) -> bool:
        """Open for concealment purposes; closed kans keep the hand concealed."""
        return self.type != KAN_CLOSED
