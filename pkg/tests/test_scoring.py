import random

import pytest

from mjsim.melds import CHI, KAN_CLOSED, KAN_OPEN, PON, Meld
from mjsim.scoring import (
    NoYakuError,
    RON,
    TSUMO,
    WinContext,
    base_points,
    ceil100,
    compute_fu,
    count_dora,
    count_dora_parts,
    detect_yaku,
    score_win,
    settle,
)
from mjsim.scoring.yaku import YakuId
from mjsim.hand.decompose import decompose_wins
from mjsim.tiles import EAST, RED_FIVE_TILES, RULE_NO_RED, RULE_RED, SOUTH, dora_kind_for_indicator

from oracle import parse_hand
from score_oracle import score_oracle

_MELD_KIND_NAMES = {CHI: "chi", PON: "pon", KAN_OPEN: "kan", KAN_CLOSED: "kan", 4: "kan"}
_RED_KINDS = (4, 13, 22)


def ids_for(counts, reds=(), rule=RULE_RED):
    """Deterministic tile ids for a count vector; the red copy is used only
    when requested (or unavoidable with all four copies held)."""
    out = []
    for k in range(34):
        c = counts[k]
        for copy in range(c):
            tile = 4 * k + copy
            if (rule == RULE_RED and k in _RED_KINDS and copy == 0
                    and k not in reds and c < 4):
                tile = 4 * k + c  # swap the red copy for an unused one
            out.append(tile)
    return tuple(out)


def _single_kind(text):
    counts, reds = parse_hand(text)
    kind = next(k for k in range(34) if counts[k])
    return kind, bool(reds)


def make_ctx(text, win, win_type, melds=(), reds=(), **kw):
    """Context from a 13-form concealed hand plus the winning tile."""
    counts, _ = parse_hand(text)
    win_kind, win_red = _single_kind(win)
    counts[win_kind] += 1
    rule = kw.pop("rule", RULE_RED)
    concealed_ids = ids_for(counts, reds=reds, rule=rule)
    win_tile = 4 * win_kind + (0 if win_red else 1)
    all_ids = list(concealed_ids)
    for m in melds:
        all_ids.extend(m.tiles)
    defaults = dict(seat_wind=SOUTH, round_wind=EAST)
    defaults.update(kw)
    return WinContext(
        concealed=bytes(counts), melds=tuple(melds), win_tile=win_tile,
        win_type=win_type, all_tile_ids=tuple(all_ids), rule=rule, **defaults)


def chi(start_kind, from_seat=3):
    tiles = tuple(4 * (start_kind + i) + 1 for i in range(3))
    return Meld(CHI, tiles, tiles[0], from_seat)


def pon(kind, from_seat=3):
    tiles = tuple(4 * kind + i + 1 for i in range(3))
    return Meld(PON, tiles, tiles[0], from_seat)


def kan(kind, meld_type=KAN_OPEN, from_seat=3):
    tiles = tuple(4 * kind + i for i in range(4))
    return Meld(meld_type, tiles, -1 if meld_type == KAN_CLOSED else tiles[0],
                -1 if meld_type == KAN_CLOSED else from_seat)


def oracle_view(ctx: WinContext, dealer, winner, loser, honba, deposits):
    melds = []
    for m in ctx.melds:
        kinds = sorted(t >> 2 for t in m.tiles)
        melds.append((_MELD_KIND_NAMES[m.type], kinds, m.type != KAN_CLOSED))
    red_count = 0
    if ctx.rule == RULE_RED:
        red_count = sum(1 for t in ctx.all_tile_ids if t in RED_FIVE_TILES)
    return {
        "concealed": list(ctx.concealed),
        "melds": melds,
        "win_kind": ctx.win_kind,
        "tsumo": ctx.win_type == TSUMO,
        "seat_wind": ctx.seat_wind,
        "round_wind": ctx.round_wind,
        "riichi": ctx.riichi,
        "ippatsu": ctx.ippatsu,
        "last_tile": ctx.is_last_tile,
        "rinshan": ctx.is_rinshan,
        "chankan": ctx.is_chankan,
        "first_draw": ctx.is_first_uninterrupted_draw,
        "dora_kinds": [dora_kind_for_indicator(t >> 2) for t in ctx.dora_indicators],
        "ura_kinds": [dora_kind_for_indicator(t >> 2) for t in ctx.ura_indicators],
        "red_count": red_count,
        "dealer": dealer,
        "winner": winner,
        "loser": loser,
        "honba": honba,
        "deposits": deposits,
    }


def assert_matches_oracle(ctx, dealer=0, winner=1, loser=2, honba=0, deposits=0):
    loser_arg = loser if ctx.win_type == RON else None
    expected = score_oracle(oracle_view(ctx, dealer, winner, loser_arg, honba, deposits))
    try:
        ws = score_win(ctx)
        s = settle(ctx.win_type, ws.base, dealer, winner, loser_arg, honba, deposits)
    except NoYakuError:
        assert expected is None, f"oracle scored {expected} but engine found no yaku"
        return None
    assert expected is not None, "engine scored but oracle found no yaku"
    exp_han, exp_fu, exp_deltas, exp_yakuman, exp_names = expected
    if ws.yaku.yakuman_count or exp_yakuman:
        assert ws.yaku.yakuman_count == exp_yakuman, (ws.yaku, exp_names)
    else:
        assert (ws.han, ws.fu) == (exp_han, exp_fu), (ws, expected)
    assert list(s.deltas) == exp_deltas
    assert sum(s.deltas) == 1000 * deposits
    return ws, s


class TestBasePoints:
    def test_spec_values(self):
        assert base_points(30, 1) == 240
        assert base_points(30, 4) == 1920
        assert base_points(40, 1) == 320

    def test_limits(self):
        assert base_points(20, 5) == 2000
        assert base_points(70, 4) == 2000  # would exceed mangan, capped
        assert base_points(30, 6) == 3000
        assert base_points(25, 7) == 3000
        assert base_points(30, 8) == 4000
        assert base_points(30, 10) == 4000
        assert base_points(30, 11) == 6000
        assert base_points(30, 13) == 6000  # counted yakuman disabled
        assert base_points(30, 13, kazoe=True) == 8000

    def test_yakuman(self):
        assert base_points(0, 0, 1) == 8000
        assert base_points(40, 3, 2) == 16000

    def test_no_yaku(self):
        with pytest.raises(NoYakuError):
            base_points(30, 0)

    def test_monotonic(self):
        for fu in (20, 25, 30, 40, 50, 60, 70):
            values = [base_points(fu, han) for han in range(1, 13)]
            assert values == sorted(values)
        for han in (1, 2, 3, 4):
            values = [base_points(fu, han) for fu in (20, 30, 40, 50, 60, 70)]
            assert values == sorted(values)


class TestSettle:
    def test_non_dealer_ron(self):
        s = settle(RON, 240, dealer_seat=0, winner_seat=1, loser_seat=2,
                   honba=0, deposits=0)
        assert s.deltas == (0, 1000, -1000, 0)

    def test_dealer_tsumo(self):
        s = settle(TSUMO, 480, dealer_seat=0, winner_seat=0, loser_seat=None,
                   honba=0, deposits=0)
        assert s.deltas == (3000, -1000, -1000, -1000)

    def test_non_dealer_tsumo(self):
        s = settle(TSUMO, 480, dealer_seat=0, winner_seat=2, loser_seat=None,
                   honba=0, deposits=0)
        assert s.deltas == (-1000, -500, 2000, -500)

    def test_honba_and_deposits(self):
        s = settle(RON, 2000, dealer_seat=0, winner_seat=0, loser_seat=3,
                   honba=2, deposits=3)
        assert s.deltas[3] == -(12000 + 600)
        assert s.deltas[0] == 12000 + 600 + 3000
        assert sum(s.deltas) == 3000
        s = settle(TSUMO, 1000, dealer_seat=0, winner_seat=1, loser_seat=None,
                   honba=1, deposits=0)
        assert s.deltas == (-2100, 4300, -1100, -1100)

    def test_zero_sum_without_pot(self):
        s = settle(RON, 320, 0, 1, 2, 0, 0)
        assert sum(s.deltas) == 0

    def test_ceil100(self):
        assert ceil100(960) == 1000
        assert ceil100(1000) == 1000
        assert ceil100(1001) == 1100


class TestDora:
    def test_indicator_successor_and_red(self):
        # indicator 4m; hand holds two 5m, one of them red
        ctx = make_ctx("234m567p789s55m22s", "2s", TSUMO, reds=(4,),
                       dora_indicators=(12,))
        dora, ura, reds = count_dora_parts(ctx)
        assert (dora, ura, reds) == (2, 0, 1)
        assert count_dora(ctx) == 3

    def test_no_red_rule(self):
        ctx = make_ctx("234m567p789s55m22s", "2s", TSUMO,
                       dora_indicators=(12,), rule=RULE_NO_RED)
        dora, ura, reds = count_dora_parts(ctx)
        assert (dora, reds) == (2, 0)
        assert count_dora(ctx) == 2

    def test_wraparound_nine_to_one(self):
        # indicator 9s; hand holds a single 1s
        ctx = make_ctx("123m456p789s22p13s", "2s", RON, dora_indicators=(26 * 4,))
        dora, _, _ = count_dora_parts(ctx)
        assert dora == 1

    def test_ura_only_with_riichi(self):
        ctx = make_ctx("345m567p789s22s56m", "4m", RON, riichi=1,
                       dora_indicators=(0,), ura_indicators=(17,))
        dora, ura, _ = count_dora_parts(ctx)
        assert (dora, ura) == (0, 1)


class TestYakuDetection:
    def test_pinfu_tanyao(self):
        ctx = make_ctx("234m345p456s88p78p", "6p", RON)
        decs = decompose_wins(ctx.concealed)
        yaku = detect_yaku(ctx, decs[0])
        got = {y for y, _ in yaku.entries}
        assert int(YakuId.PINFU) in got
        assert int(YakuId.TANYAO) in got

    def test_yakuhai_toitoi(self):
        ctx = make_ctx("111m222p99s55z", "5z", RON, melds=(pon(20),),
                       seat_wind=EAST, round_wind=EAST)
        ws = score_win(ctx)
        got = {y for y, _ in ws.yaku.entries}
        assert int(YakuId.YAKUHAI_WHITE) in got
        assert int(YakuId.TOITOI) in got

    def test_kokushi(self):
        ctx = make_ctx("19m19p19s1234567z", "1m", TSUMO)
        ws = score_win(ctx)
        assert ws.yaku.yakuman_count >= 1
        assert ws.yaku.has(int(YakuId.KOKUSHI))

    def test_menzen_tsumo(self):
        ctx = make_ctx("234m456p888s44m67p", "8p", TSUMO)
        assert score_win(ctx).yaku.has(int(YakuId.MENZEN_TSUMO))

    def test_no_yaku_open_hand(self):
        ctx = make_ctx("234m44m88s567p", "8s", RON, melds=(chi(0),))
        with pytest.raises(NoYakuError):
            score_win(ctx)

    def test_riichi_ippatsu(self):
        ctx = make_ctx("234m456p888s44m67p", "8p", TSUMO, riichi=1, ippatsu=True)
        ws = score_win(ctx)
        assert ws.yaku.has(int(YakuId.RIICHI))
        assert ws.yaku.has(int(YakuId.IPPATSU))

    def test_double_riichi_replaces_riichi(self):
        ctx = make_ctx("234m456p888s44m67p", "8p", RON, riichi=2)
        ws = score_win(ctx)
        assert ws.yaku.has(int(YakuId.DOUBLE_RIICHI))
        assert not ws.yaku.has(int(YakuId.RIICHI))

    def test_chiitoitsu_excludes_set_yaku(self):
        ctx = make_ctx("1122m4455p88s33z5z", "5z", RON)
        ws = score_win(ctx)
        assert ws.yaku.has(int(YakuId.CHIITOITSU))
        assert ws.fu == 25
        assert not ws.yaku.has(int(YakuId.PINFU))

    def test_suuankou_tanki_counts_one_by_default(self):
        ctx = make_ctx("111m222p333s999s4z", "4z", RON)
        ws = score_win(ctx)
        assert ws.yaku.has(int(YakuId.SUUANKOU))
        assert ws.yaku.yakuman_count == 1

    def test_tenhou(self):
        ctx = make_ctx("234m456p888s44m67p", "8p", TSUMO, seat_wind=EAST,
                       is_first_uninterrupted_draw=True)
        assert score_win(ctx).yaku.has(int(YakuId.TENHOU))

    def test_chiihou(self):
        ctx = make_ctx("234m456p888s44m67p", "8p", TSUMO, seat_wind=SOUTH,
                       is_first_uninterrupted_draw=True)
        assert score_win(ctx).yaku.has(int(YakuId.CHIIHOU))

    def test_situational_yaku(self):
        base = "234m456p888s44m67p"
        assert score_win(make_ctx(base, "8p", TSUMO, is_last_tile=True)).yaku.has(int(YakuId.HAITEI))
        assert score_win(make_ctx(base, "8p", RON, is_last_tile=True)).yaku.has(int(YakuId.HOUTEI))
        assert score_win(make_ctx(base, "8p", TSUMO, is_rinshan=True)).yaku.has(int(YakuId.RINSHAN))
        assert score_win(make_ctx(base, "8p", RON, is_chankan=True)).yaku.has(int(YakuId.CHANKAN))

    def test_dora_alone_never_wins(self):
        # open hand, no yaku, but plenty of dora
        ctx = make_ctx("234m44m88s567p", "8s", RON, melds=(chi(0),),
                       dora_indicators=(4, 8, 12))
        with pytest.raises(NoYakuError):
            score_win(ctx)


class TestFu:
    def test_pinfu_tsumo_20(self):
        ctx = make_ctx("234m345p456s88p78p", "6p", TSUMO)
        ws = score_win(ctx)
        assert ws.yaku.has(int(YakuId.PINFU))
        assert ws.fu == 20

    def test_pinfu_ron_30(self):
        ctx = make_ctx("234m345p456s88p78p", "6p", RON)
        assert score_win(ctx).fu == 30

    def test_chiitoi_25(self):
        ctx = make_ctx("1122m4455p88s33z5z", "5z", RON)
        assert score_win(ctx).fu == 25

    def test_edge_wait_terminal_triplet_40(self):
        # closed ron: 20 base + 10 menzen + 8 terminal triplet + 2 edge wait
        ctx = make_ctx("111m456p789s12p44z", "3p", RON, riichi=1)
        assert score_win(ctx).fu == 40

    def test_compute_fu_public_api(self):
        ctx = make_ctx("111m456p789s12p44z", "3p", RON)
        decs = decompose_wins(ctx.concealed)
        yaku = detect_yaku(ctx, decs[0])
        assert compute_fu(ctx, decs[0], yaku) == 40

    def test_seven_pairs_fixed(self):
        ctx = make_ctx("1122m4455p88s33z5z", "5z", TSUMO)
        assert compute_fu(ctx, "seven_pairs", score_win(ctx).yaku) == 25


GOLDEN_CASES = [
    # (concealed-13, win, type, melds, ctx kwargs, settle kwargs)
    ("234m345p456s88p78p", "6p", TSUMO, (), {}, {}),
    ("234m345p456s88p78p", "6p", RON, (), {}, {}),
    ("234m345p456s88p78p", "6p", RON, (), {}, {"dealer": 1, "winner": 1, "loser": 0}),
    ("1122m4455p88s33z5z", "5z", RON, (), {}, {}),
    ("1122m4455p88s33z5z", "5z", TSUMO, (), {}, {}),
    ("234m345p7888p", "6p", RON, (chi(21),), {}, {}),
    ("111m222p99s55z", "5z", RON, (pon(20),), {"seat_wind": EAST, "round_wind": EAST}, {}),
    ("234m456p888s44m67p", "8p", TSUMO, (),
     {"riichi": 1, "ippatsu": True, "ura_indicators": (0,)}, {}),
    ("111m456p789s12p44z", "3p", RON, (), {"riichi": 1}, {}),
    ("123m456p789s11z2z2z", "1z", RON, (), {}, {}),
    ("345m345p345s22m67m", "5m", TSUMO, (), {}, {}),
    ("123m456m789m22p67p", "5p", RON, (), {}, {}),
    ("123p456p789p2m", "2m", RON, (chi(18),), {}, {}),
    ("123m789m123s789s9p", "9p", RON, (), {}, {}),
    ("111m999m111s999s1p", "1p", TSUMO, (), {}, {}),
    ("19m19p19s1234567z", "9m", TSUMO, (), {}, {}),
    ("119m19p19s123456z", "7z", RON, (), {}, {}),
    ("111m222p333s999s4z", "4z", RON, (), {}, {}),
    ("222m555z66z2s3s", "1s", RON, (pon(33),), {}, {}),
    ("11m99m11p99p11s99s1z", "1z", RON, (), {}, {}),
    ("1112345678999m", "5m", TSUMO, (), {}, {}),
    ("2m", "2m", TSUMO, (kan(4, KAN_CLOSED), kan(13, KAN_CLOSED),
                         kan(22), kan(31)), {}, {}),
    ("234m456p888s44m67p", "8p", TSUMO, (), {"is_last_tile": True}, {}),
    ("234m456p888s44m67p", "8p", RON, (), {"is_last_tile": True}, {}),
    ("234m456p888s44m67p", "8p", TSUMO, (), {"is_rinshan": True}, {}),
    ("234m456p888s44m67p", "8p", RON, (), {"is_chankan": True}, {}),
    ("234m456p888s44m67p", "8p", RON, (), {"riichi": 2}, {}),
    ("222m444p666s888s3z", "3z", TSUMO, (), {}, {}),
    ("123m456p789s2s", "2s", RON, (pon(31),), {}, {}),
    ("1122334455667p", "7p", RON, (), {}, {}),
    ("123m456p789s55s67m", "5m", RON, (), {}, {"honba": 3}),
    ("234m345p456s88p78p", "6p", RON, (), {}, {"deposits": 2}),
    ("567m567p567s22s99s", "2s", TSUMO, (), {}, {}),
    ("456m456p456s222z3z", "3z", TSUMO, (), {}, {}),
    ("111222333m99m12m", "3m", RON, (), {}, {}),
    ("19m19p19s1234567z", "7z", TSUMO, (),
     {"seat_wind": EAST, "is_first_uninterrupted_draw": True}, {}),
    ("234m567p789s55m22s", "2s", TSUMO, (), {"dora_indicators": (12,)}, {}),
    ("234m456p888s44m67p", "8p", TSUMO, (), {"seat_wind": EAST},
     {"dealer": 0, "winner": 0}),
]


class TestOracleGoldens:
    def test_golden_cases_match_independent_scorer(self):
        count = 0
        for hand, win, wtype, melds, kw, skw in GOLDEN_CASES:
            ctx = make_ctx(hand, win, wtype, melds=melds, **kw)
            args = dict(dealer=0, winner=1, loser=2, honba=0, deposits=0)
            args.update(skw)
            if wtype == TSUMO:
                args["loser"] = None
            assert_matches_oracle(ctx, **args)
            count += 1
        assert count >= 30


class TestRandomizedOracleParity:
    def test_random_winning_hands(self, tables):
        rng = random.Random(0xFEED)
        checked = 0
        while checked < 250:
            made = _random_win(rng)
            if made is None:
                continue
            ctx, args = made
            assert_matches_oracle(ctx, **args)
            checked += 1


def _random_win(rng):
    counts = [0] * 34
    sets = []
    for _ in range(4):
        if rng.random() < 0.55:
            start = rng.choice([s * 9 + n for s in range(3) for n in range(7)])
            group = [start, start + 1, start + 2]
        else:
            k = rng.randrange(34)
            group = [k, k, k]
        for k in group:
            counts[k] += 1
        sets.append(group)
    pair = rng.randrange(34)
    counts[pair] += 2
    if any(c > 4 for c in counts):
        return None
    meld_objs = []
    for g in sets[: rng.randint(0, 2)]:
        for k in g:
            counts[k] -= 1
        meld_objs.append(pon(g[0]) if g[0] == g[1] else chi(g[0]))
    concealed_kinds = [k for k in range(34) for _ in range(counts[k])]
    if not concealed_kinds:
        return None
    win_kind = rng.choice(concealed_kinds)
    win_type = rng.choice([TSUMO, RON])
    riichi = rng.choice([0, 0, 1]) if not meld_objs else 0
    kw = dict(
        riichi=riichi,
        ippatsu=bool(riichi and rng.random() < 0.3),
        is_last_tile=rng.random() < 0.1,
        dora_indicators=tuple(rng.randrange(136) for _ in range(rng.randint(0, 2))),
        ura_indicators=tuple(rng.randrange(136)
                             for _ in range(rng.randint(0, 2))) if riichi else (),
        seat_wind=27 + rng.randrange(4),
        round_wind=rng.choice([EAST, SOUTH]),
    )
    if win_type == TSUMO:
        kw["is_rinshan"] = rng.random() < 0.1
    else:
        kw["is_chankan"] = rng.random() < 0.1
    concealed_ids = ids_for(counts)
    win_tile = next(t for t in concealed_ids if t >> 2 == win_kind)
    all_ids = list(concealed_ids)
    for m in meld_objs:
        all_ids.extend(m.tiles)
    ctx = WinContext(
        concealed=bytes(counts), melds=tuple(meld_objs), win_tile=win_tile,
        win_type=win_type, all_tile_ids=tuple(all_ids), rule=RULE_RED, **kw)
    dealer = rng.randrange(4)
    winner = rng.randrange(4)
    loser = None
    if win_type == RON:
        loser = (winner + 1 + rng.randrange(3)) % 4
    return ctx, dict(dealer=dealer, winner=winner, loser=loser,
                     honba=rng.randint(0, 3), deposits=rng.randint(0, 2))
