"""Dora counting: indicator successors, ura for riichi wins, red fives."""

from __future__ import annotations

from ..tiles import RED_FIVE_TILES, RULE_RED, dora_kind_for_indicator
from .context import WinContext


def count_dora_parts(ctx: WinContext) -> tuple[int, int, int]:
    """(indicator dora, ura dora, red fives) over all tiles in the hand."""
    kind_counts = [0] * 34
    reds = 0
    for t in ctx.all_tile_ids:
        kind_counts[t >> 2] += 1
        if ctx.rule == RULE_RED and t in RED_FIVE_TILES:
            reds += 1
    dora = sum(kind_counts[dora_kind_for_indicator(ind >> 2)] for ind in ctx.dora_indicators)
    ura = 0
    if ctx.riichi:
        ura = sum(kind_counts[dora_kind_for_indicator(ind >> 2)] for ind in ctx.ura_indicators)
    return dora, ura, reds


def count_dora(ctx: WinContext) -> int:
    dora, ura, reds = count_dora_parts(ctx)
    return dora + ura + reds
