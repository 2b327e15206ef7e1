"""Win valuation: enumerate candidate readings, pick the highest-scoring."""

from __future__ import annotations

from dataclasses import dataclass

from ..hand.decompose import decompose_wins
from ..tiles import ORPHAN_KINDS
from .context import NoYakuError, WinContext, YakuList
from .dora import count_dora_parts
from .fu import fu_for_placement
from .points import base_points
from .yaku import (
    detect_kokushi,
    detect_seven_pairs,
    detect_standard,
    wait_placements,
)


@dataclass(frozen=True)
class WinScore:
    yaku: YakuList
    han: int  # yaku han plus dora; 0 for yakuman hands
    fu: int
    base: int
    dora: int
    ura: int
    reds: int
    form: str  # "standard" | "seven_pairs" | "kokushi"


def _is_seven_pairs(counts: bytes) -> bool:
    return sum(1 for c in counts if c == 2) == 7


def _is_kokushi(counts: bytes) -> bool:
    if any(counts[k] for k in range(34) if k not in ORPHAN_KINDS):
        return False
    kinds = sum(1 for k in ORPHAN_KINDS if counts[k])
    pair = sum(1 for k in ORPHAN_KINDS if counts[k] == 2)
    return kinds == 13 and pair == 1


def score_win(ctx: WinContext, kazoe: bool = False, double_yakuman: bool = False) -> WinScore:
    """Value a winning hand, maximizing final points over all candidate
    readings (base points, then han, then fu break ties).

    Raises NoYakuError when no reading carries a yaku.
    """
    dora, ura, reds = count_dora_parts(ctx)
    bonus = dora + ura + reds
    best: tuple | None = None

    def consider(yaku: YakuList, fu: int, form: str):
        nonlocal best
        if yaku.yakuman_count:
            han = 0
            base = base_points(fu, 0, yaku.yakuman_count, kazoe)
        else:
            if yaku.han == 0:
                return
            han = yaku.han + bonus
            base = base_points(fu, han, 0, kazoe)
        key = (base, yaku.yakuman_count, han, fu)
        if best is None or key > best[0]:
            best = (key, WinScore(yaku, han, fu, base, dora, ura, reds, form))

    concealed_only = not ctx.melds
    if concealed_only and _is_kokushi(ctx.concealed):
        consider(detect_kokushi(ctx, double_yakuman), 0, "kokushi")
    if concealed_only and _is_seven_pairs(ctx.concealed):
        consider(detect_seven_pairs(ctx, double_yakuman), 25, "seven_pairs")
    for dec in decompose_wins(ctx.concealed, ctx.melds):
        for wait_block, wait in wait_placements(dec, ctx):
            yaku = detect_standard(ctx, dec, wait_block, wait, double_yakuman)
            fu = fu_for_placement(ctx, dec, wait_block, wait, yaku)
            consider(yaku, fu, "standard")

    if best is None:
        raise NoYakuError("winning shape but no yaku")
    return best[1]
