"""Minipoint (fu) computation."""

from __future__ import annotations

from ..tiles import DRAGONS, is_terminal_or_honor
from .context import RON, WinContext, YakuList
from .yaku import TWO_FU_WAITS, YakuId, blocks_of, wait_placements
from ..hand.decompose import Decomposition


def _block_fu(block) -> int:
    if block.run:
        return 0
    base = 2
    if not block.open and not block.ron_completed:
        base *= 2
    if block.kan:
        base *= 4
    if is_terminal_or_honor(block.start):
        base *= 2
    return base


def _pair_fu(pair: int, seat_wind: int, round_wind: int) -> int:
    fu = 0
    if pair in DRAGONS:
        fu += 2
    if pair == seat_wind:
        fu += 2
    if pair == round_wind:
        fu += 2
    return fu


def fu_for_placement(ctx: WinContext, dec: Decomposition, wait_block: int, wait: str,
                     yaku: YakuList) -> int:
    """Fu of one wait reading; fixed values for seven pairs and pinfu."""
    if yaku.has(int(YakuId.CHIITOITSU)):
        return 25
    pinfu = yaku.has(int(YakuId.PINFU))
    ron = ctx.win_type == RON
    if pinfu:
        return 30 if ron else 20
    fu = 20
    for block in blocks_of(dec, ctx, wait_block):
        fu += _block_fu(block)
    fu += _pair_fu(dec.pair, ctx.seat_wind, ctx.round_wind)
    if wait in TWO_FU_WAITS:
        fu += 2
    if ron and ctx.is_closed:
        fu += 10
    if not ron:
        fu += 2
    return (fu + 9) // 10 * 10


def compute_fu(ctx: WinContext, dec: Decomposition | str, yaku: YakuList) -> int:
    """Fu for a decomposition, choosing the highest-fu wait reading that is
    consistent with the yaku list (pinfu forces a two-sided wait)."""
    if dec == "seven_pairs":
        return 25
    if dec == "kokushi":
        return 0  # unused: thirteen orphans score as yakuman
    best = 0
    for wait_block, wait in wait_placements(dec, ctx):
        if yaku.has(int(YakuId.PINFU)) and wait != "ryanmen":
            continue
        best = max(best, fu_for_placement(ctx, dec, wait_block, wait, yaku))
    return best
