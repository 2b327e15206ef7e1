"""Yaku detection.

The yaku set follows the tournament-style list: no iipeiko/ryanpeiko, no
local yaku, kazoe handling left to the limit table.  Yakuman supersede
regular yaku; multiple yakuman add their counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from ..melds import CHI, KAN_CLOSED
from ..tiles import (
    DRAGONS,
    GREEN_KINDS,
    EAST,
    WINDS,
    is_terminal,
    is_terminal_or_honor,
)
from .context import RON, TSUMO, WinContext, YakuList
from ..hand.decompose import RUN, Decomposition


class YakuId(IntEnum):
    RIICHI = 0
    DOUBLE_RIICHI = 1
    IPPATSU = 2
    MENZEN_TSUMO = 3
    PINFU = 4
    TANYAO = 5
    YAKUHAI_WHITE = 6
    YAKUHAI_GREEN = 7
    YAKUHAI_RED = 8
    YAKUHAI_SEAT = 9
    YAKUHAI_ROUND = 10
    SANSHOKU_DOUJUN = 11
    SANSHOKU_DOUKOU = 12
    ITTSU = 13
    CHANTA = 14
    JUNCHAN = 15
    TOITOI = 16
    SANANKOU = 17
    SANKANTSU = 18
    CHIITOITSU = 19
    HONROUTOU = 20
    SHOUSANGEN = 21
    HONITSU = 22
    CHINITSU = 23
    HAITEI = 24
    HOUTEI = 25
    RINSHAN = 26
    CHANKAN = 27
    KOKUSHI = 28
    SUUANKOU = 29
    DAISANGEN = 30
    SHOUSUUSHI = 31
    DAISUUSHI = 32
    TSUUIISOU = 33
    CHINROUTOU = 34
    RYUUIISOU = 35
    CHUUREN = 36
    SUUKANTSU = 37
    TENHOU = 38
    CHIIHOU = 39


_NAMES = {
    YakuId.RIICHI: ("Riichi", "立直"),
    YakuId.DOUBLE_RIICHI: ("Double Riichi", "両立直"),
    YakuId.IPPATSU: ("Ippatsu", "一発"),
    YakuId.MENZEN_TSUMO: ("Menzen Tsumo", "門前清自摸和"),
    YakuId.PINFU: ("Pinfu", "平和"),
    YakuId.TANYAO: ("Tanyao", "断幺九"),
    YakuId.YAKUHAI_WHITE: ("White Dragon", "役牌 白"),
    YakuId.YAKUHAI_GREEN: ("Green Dragon", "役牌 發"),
    YakuId.YAKUHAI_RED: ("Red Dragon", "役牌 中"),
    YakuId.YAKUHAI_SEAT: ("Seat Wind", "自風牌"),
    YakuId.YAKUHAI_ROUND: ("Round Wind", "場風牌"),
    YakuId.SANSHOKU_DOUJUN: ("Mixed Triple Sequence", "三色同順"),
    YakuId.SANSHOKU_DOUKOU: ("Mixed Triple Triplets", "三色同刻"),
    YakuId.ITTSU: ("Pure Straight", "一気通貫"),
    YakuId.CHANTA: ("Outside Hand", "混全帯幺九"),
    YakuId.JUNCHAN: ("Terminals In All Sets", "純全帯幺九"),
    YakuId.TOITOI: ("All Triplets", "対々和"),
    YakuId.SANANKOU: ("Three Concealed Triplets", "三暗刻"),
    YakuId.SANKANTSU: ("Three Kans", "三槓子"),
    YakuId.CHIITOITSU: ("Seven Pairs", "七対子"),
    YakuId.HONROUTOU: ("All Terminals And Honors", "混老頭"),
    YakuId.SHOUSANGEN: ("Little Three Dragons", "小三元"),
    YakuId.HONITSU: ("Half Flush", "混一色"),
    YakuId.CHINITSU: ("Full Flush", "清一色"),
    YakuId.HAITEI: ("Last Tile Draw", "海底摸月"),
    YakuId.HOUTEI: ("Last Tile Claim", "河底撈魚"),
    YakuId.RINSHAN: ("After A Kan", "嶺上開花"),
    YakuId.CHANKAN: ("Robbing A Kan", "槍槓"),
    YakuId.KOKUSHI: ("Thirteen Orphans", "国士無双"),
    YakuId.SUUANKOU: ("Four Concealed Triplets", "四暗刻"),
    YakuId.DAISANGEN: ("Big Three Dragons", "大三元"),
    YakuId.SHOUSUUSHI: ("Little Four Winds", "小四喜"),
    YakuId.DAISUUSHI: ("Big Four Winds", "大四喜"),
    YakuId.TSUUIISOU: ("All Honors", "字一色"),
    YakuId.CHINROUTOU: ("All Terminals", "清老頭"),
    YakuId.RYUUIISOU: ("All Green", "緑一色"),
    YakuId.CHUUREN: ("Nine Gates", "九蓮宝燈"),
    YakuId.SUUKANTSU: ("Four Kans", "四槓子"),
    YakuId.TENHOU: ("Blessing Of Heaven", "天和"),
    YakuId.CHIIHOU: ("Blessing Of Earth", "地和"),
}

YAKU_BY_ID = {int(y): _NAMES[y][0] for y in YakuId}


def yaku_name(yaku_id: int, locale: str = "en") -> str:
    en, ja = _NAMES[YakuId(yaku_id)]
    return ja if locale == "ja" else en


# wait shapes for the block containing the winning tile
RYANMEN = "ryanmen"
KANCHAN = "kanchan"
PENCHAN = "penchan"
SHANPON = "shanpon"
TANKI = "tanki"

TWO_FU_WAITS = (KANCHAN, PENCHAN, TANKI)


@dataclass(frozen=True)
class _Block:
    run: bool
    start: int  # run start kind, or the triplet/kan kind
    open: bool
    kan: bool
    ron_completed: bool = False

    @property
    def kinds(self) -> tuple[int, ...]:
        return (self.start, self.start + 1, self.start + 2) if self.run else (self.start,)

    def concealed_triplet(self) -> bool:
        return not self.run and not self.open and not self.ron_completed


def blocks_of(dec: Decomposition, ctx: WinContext, wait_block: int) -> list[_Block]:
    """Concealed sets first (in dec order), then melds.  `wait_block`
    indexes into the concealed sets; -1 means the pair completed the hand."""
    blocks = []
    for i, (set_kind, start) in enumerate(dec.sets):
        ron_fill = ctx.win_type == RON and i == wait_block and set_kind != RUN
        blocks.append(_Block(set_kind == RUN, start, False, False, ron_fill))
    for m in ctx.melds:
        blocks.append(_Block(m.type == CHI, m.base_kind, m.type != KAN_CLOSED, m.is_kan()))
    return blocks


def wait_placements(dec: Decomposition, ctx: WinContext) -> list[tuple[int, str]]:
    """All (wait_block, wait_shape) readings of where the winning tile sits."""
    k = ctx.win_kind
    out = []
    for i, (set_kind, start) in enumerate(dec.sets):
        if set_kind == RUN:
            if start == k:
                out.append((i, RYANMEN if k % 9 <= 5 else PENCHAN))
            elif start + 1 == k:
                out.append((i, KANCHAN))
            elif start + 2 == k:
                out.append((i, RYANMEN if k % 9 >= 3 else PENCHAN))
        elif start == k:
            out.append((i, SHANPON))
    if dec.pair == k:
        out.append((-1, TANKI))
    return out


def _suit_profile(kinds_present):
    suits = set()
    honors = False
    for k in kinds_present:
        if k >= 27:
            honors = True
        else:
            suits.add(k // 9)
    return suits, honors


def detect_standard(ctx: WinContext, dec: Decomposition, wait_block: int, wait: str,
                    double_yakuman: bool = False) -> YakuList:
    blocks = blocks_of(dec, ctx, wait_block)
    closed = ctx.is_closed
    tsumo = ctx.win_type == TSUMO
    pair = dec.pair

    kinds_present = set()
    for b in blocks:
        kinds_present.update(b.kinds)
    kinds_present.add(pair)

    triplet_kinds = {b.start for b in blocks if not b.run}
    concealed_trips = sum(1 for b in blocks if b.concealed_triplet())
    kans = sum(1 for b in blocks if b.kan)
    all_triplets = all(not b.run for b in blocks)
    run_starts = [b.start for b in blocks if b.run]

    yakuman: list[tuple[int, int]] = []
    if ctx.is_first_uninterrupted_draw and tsumo and not ctx.melds:
        yakuman.append((int(YakuId.TENHOU if ctx.seat_wind == EAST else YakuId.CHIIHOU), 1))
    if concealed_trips == 4:
        n = 2 if (double_yakuman and wait == TANKI) else 1
        yakuman.append((int(YakuId.SUUANKOU), n))
    if all(k in triplet_kinds for k in DRAGONS):
        yakuman.append((int(YakuId.DAISANGEN), 1))
    wind_trips = sum(1 for k in WINDS if k in triplet_kinds)
    if wind_trips == 4:
        yakuman.append((int(YakuId.DAISUUSHI), 2 if double_yakuman else 1))
    elif wind_trips == 3 and pair in WINDS:
        yakuman.append((int(YakuId.SHOUSUUSHI), 1))
    if all(k >= 27 for k in kinds_present):
        yakuman.append((int(YakuId.TSUUIISOU), 1))
    if all(is_terminal(k) for k in kinds_present):
        yakuman.append((int(YakuId.CHINROUTOU), 1))
    if all(k in GREEN_KINDS for k in kinds_present):
        yakuman.append((int(YakuId.RYUUIISOU), 1))
    if kans == 4:
        yakuman.append((int(YakuId.SUUKANTSU), 1))
    chuuren = _is_chuuren(ctx)
    if chuuren:
        n = 2 if (double_yakuman and chuuren == 2) else 1
        yakuman.append((int(YakuId.CHUUREN), n))
    if yakuman:
        return YakuList(tuple(yakuman), sum(n for _, n in yakuman))

    entries: list[tuple[int, int]] = []

    def add(yaku: YakuId, han: int):
        entries.append((int(yaku), han))

    if ctx.riichi == 2:
        add(YakuId.DOUBLE_RIICHI, 2)
    elif ctx.riichi == 1:
        add(YakuId.RIICHI, 1)
    if ctx.ippatsu:
        add(YakuId.IPPATSU, 1)
    if closed and tsumo:
        add(YakuId.MENZEN_TSUMO, 1)

    if (closed and all(b.run for b in blocks)
            and pair not in DRAGONS and pair != ctx.seat_wind and pair != ctx.round_wind
            and wait == RYANMEN):
        add(YakuId.PINFU, 1)

    if all(not is_terminal_or_honor(k) for k in kinds_present):
        add(YakuId.TANYAO, 1)

    for dragon, yaku in zip(DRAGONS, (YakuId.YAKUHAI_WHITE, YakuId.YAKUHAI_GREEN, YakuId.YAKUHAI_RED)):
        if dragon in triplet_kinds:
            add(yaku, 1)
    if ctx.seat_wind in triplet_kinds:
        add(YakuId.YAKUHAI_SEAT, 1)
    if ctx.round_wind in triplet_kinds:
        add(YakuId.YAKUHAI_ROUND, 1)

    if any(all(n + 9 * s in run_starts for s in range(3)) for n in range(7)):
        add(YakuId.SANSHOKU_DOUJUN, 2 if closed else 1)
    if any(all(n + 9 * s in triplet_kinds for s in range(3)) for n in range(9)):
        add(YakuId.SANSHOKU_DOUKOU, 2)
    if any(all(9 * s + n in run_starts for n in (0, 3, 6)) for s in range(3)):
        add(YakuId.ITTSU, 2 if closed else 1)

    blocks_outside = all(
        any(is_terminal_or_honor(k) for k in b.kinds) for b in blocks
    ) and is_terminal_or_honor(pair)
    has_run = any(b.run for b in blocks)
    has_honor = any(k >= 27 for k in kinds_present)
    if blocks_outside and has_run:
        if has_honor:
            add(YakuId.CHANTA, 2 if closed else 1)
        else:
            add(YakuId.JUNCHAN, 3 if closed else 2)

    if all_triplets:
        add(YakuId.TOITOI, 2)
    if concealed_trips == 3:
        add(YakuId.SANANKOU, 2)
    if kans == 3:
        add(YakuId.SANKANTSU, 2)
    if blocks_outside and not has_run and has_honor:
        add(YakuId.HONROUTOU, 2)
    if sum(1 for k in DRAGONS if k in triplet_kinds) == 2 and pair in DRAGONS:
        add(YakuId.SHOUSANGEN, 2)

    suits, honors = _suit_profile(kinds_present)
    if len(suits) == 1:
        if honors:
            add(YakuId.HONITSU, 3 if closed else 2)
        else:
            add(YakuId.CHINITSU, 6 if closed else 5)

    _situational(ctx, add)
    return YakuList(tuple(entries), 0)


def _situational(ctx: WinContext, add) -> None:
    if ctx.is_last_tile:
        add(YakuId.HAITEI if ctx.win_type == TSUMO else YakuId.HOUTEI, 1)
    if ctx.is_rinshan:
        add(YakuId.RINSHAN, 1)
    if ctx.is_chankan:
        add(YakuId.CHANKAN, 1)


def _is_chuuren(ctx: WinContext) -> int:
    """0 = no, 1 = nine gates, 2 = pure nine-sided wait."""
    if ctx.melds or not ctx.is_closed:
        return 0
    counts = ctx.concealed
    suits = {k // 9 for k in range(27) if counts[k]}
    if len(suits) != 1 or any(counts[k] for k in range(27, 34)):
        return 0
    s = suits.pop() * 9
    base = [3, 1, 1, 1, 1, 1, 1, 1, 3]
    extra = -1
    for i in range(9):
        d = counts[s + i] - base[i]
        if d == 0:
            continue
        if d == 1 and extra < 0:
            extra = i
        else:
            return 0
    if extra < 0:
        return 0
    return 2 if s + extra == ctx.win_kind else 1


def detect_seven_pairs(ctx: WinContext, double_yakuman: bool = False) -> YakuList:
    counts = ctx.concealed
    kinds_present = [k for k in range(34) if counts[k]]
    yakuman = []
    if ctx.is_first_uninterrupted_draw and ctx.win_type == TSUMO:
        yakuman.append((int(YakuId.TENHOU if ctx.seat_wind == EAST else YakuId.CHIIHOU), 1))
    if all(k >= 27 for k in kinds_present):
        yakuman.append((int(YakuId.TSUUIISOU), 1))
    if yakuman:
        return YakuList(tuple(yakuman), sum(n for _, n in yakuman))

    entries = []

    def add(yaku: YakuId, han: int):
        entries.append((int(yaku), han))

    if ctx.riichi == 2:
        add(YakuId.DOUBLE_RIICHI, 2)
    elif ctx.riichi == 1:
        add(YakuId.RIICHI, 1)
    if ctx.ippatsu:
        add(YakuId.IPPATSU, 1)
    if ctx.win_type == TSUMO:
        add(YakuId.MENZEN_TSUMO, 1)
    add(YakuId.CHIITOITSU, 2)
    if all(not is_terminal_or_honor(k) for k in kinds_present):
        add(YakuId.TANYAO, 1)
    if all(is_terminal_or_honor(k) for k in kinds_present):
        add(YakuId.HONROUTOU, 2)
    suits, honors = _suit_profile(kinds_present)
    if len(suits) == 1:
        add(YakuId.HONITSU if honors else YakuId.CHINITSU, (3 if honors else 6))
    _situational(ctx, add)
    return YakuList(tuple(entries), 0)


def detect_kokushi(ctx: WinContext, double_yakuman: bool = False) -> YakuList:
    counts = ctx.concealed
    # thirteen-sided when the hand held all 13 orphan kinds before the win tile
    pure = counts[ctx.win_kind] == 2
    entries = [(int(YakuId.KOKUSHI), 2 if (double_yakuman and pure) else 1)]
    if ctx.is_first_uninterrupted_draw and ctx.win_type == TSUMO:
        entries.insert(0, (int(YakuId.TENHOU if ctx.seat_wind == EAST else YakuId.CHIIHOU), 1))
    return YakuList(tuple(entries), sum(n for _, n in entries))


def detect_yaku(ctx: WinContext, dec: Decomposition | str,
                double_yakuman: bool = False) -> YakuList:
    """Yaku for one decomposition (or "seven_pairs" / "kokushi" markers).

    For standard decompositions the winning tile may sit in several
    blocks; the reading that maximizes han (pinfu when available) is
    returned.  Raises NoYakuError never; an empty list means no yaku.
    """
    if dec == "seven_pairs":
        return detect_seven_pairs(ctx, double_yakuman)
    if dec == "kokushi":
        return detect_kokushi(ctx, double_yakuman)
    placements = wait_placements(dec, ctx)
    if not placements:
        raise ValueError("winning tile not present in decomposition")
    best = None
    for wait_block, wait in placements:
        cand = detect_standard(ctx, dec, wait_block, wait, double_yakuman)
        key = (cand.yakuman_count, cand.han)
        if best is None or key > best[0]:
            best = (key, cand)
    return best[1]
