"""Independent brute-force scorer used to cross-check the scoring module.

Implements decomposition enumeration, yaku detection, fu, limits, and
payments directly from the rule definitions, sharing no code with
mjsim.scoring.  Input is a plain dict so the two sides only agree on data.

Context dict keys:
  concealed: list[34] counts including the win tile
  melds: list of (type, kinds, open) with type in {"chi","pon","kan"},
         kinds = list of kind ids in the set, open = bool,
         ron_like = True for pon/open kan (affects nothing here beyond open)
  win_kind, win_is_red (bool), tsumo (bool)
  seat_wind, round_wind, riichi (0/1/2), ippatsu, last_tile, rinshan,
  chankan, first_draw, dora_kinds (successor kinds, already mapped),
  ura_kinds, red_count (red fives in hand incl. melds)
  dealer, winner, loser (None for tsumo), honba, deposits
"""

ORPHANS = {0, 8, 9, 17, 18, 26, 27, 28, 29, 30, 31, 32, 33}
DRAGONS = (31, 32, 33)
WINDS = (27, 28, 29, 30)
GREENS = {19, 20, 21, 23, 25, 32}


def enumerate_decs(counts):
    """All (pair, sets) splits; sets are ('run'|'trip', start) tuples."""
    out = set()
    counts = list(counts)

    def sets_of(c, acc, need):
        if need == 0:
            if not any(c):
                yield tuple(sorted(acc))
            return
        i = next((j for j in range(34) if c[j]), None)
        if i is None:
            return
        if c[i] >= 3:
            c[i] -= 3
            yield from sets_of(c, acc + [("trip", i)], need - 1)
            c[i] += 3
        if i < 27 and i % 9 < 7 and c[i + 1] and c[i + 2]:
            c[i] -= 1; c[i + 1] -= 1; c[i + 2] -= 1
            yield from sets_of(c, acc + [("run", i)], need - 1)
            c[i] += 1; c[i + 1] += 1; c[i + 2] += 1

    total = sum(counts)
    need = (total - 2) // 3
    for pair in range(34):
        if counts[pair] >= 2:
            counts[pair] -= 2
            for sets in sets_of(counts, [], need):
                out.add((pair, sets))
            counts[pair] += 2
    return sorted(out)


def wait_readings(pair, sets, win_kind):
    reads = []
    for i, (k, s) in enumerate(sets):
        if k == "run":
            if s == win_kind:
                reads.append((i, "ryanmen" if s % 9 <= 5 else "penchan"))
            elif s + 1 == win_kind:
                reads.append((i, "kanchan"))
            elif s + 2 == win_kind:
                reads.append((i, "ryanmen" if win_kind % 9 >= 3 else "penchan"))
        elif s == win_kind:
            reads.append((i, "shanpon"))
    if pair == win_kind:
        reads.append((-1, "tanki"))
    return reads


def _all_kinds(pair, sets, melds):
    kinds = [pair, pair]
    for k, s in sets:
        kinds += [s, s + 1, s + 2] if k == "run" else [s, s, s]
    for _, mk, _ in melds:
        kinds += mk
    return kinds


def yaku_of(ctx, pair, sets, melds, wait_idx, wait):
    """Returns (list of (name, han), yakuman_count)."""
    closed = all(not open_ for _, _, open_ in melds)
    tsumo = ctx["tsumo"]
    kinds = _all_kinds(pair, sets, melds)
    runs = [s for k, s in sets if k == "run"] + [mk[0] for t, mk, _ in melds if t == "chi"]
    trips = [s for k, s in sets if k == "trip"] + [mk[0] for t, mk, _ in melds if t != "chi"]
    kans = sum(1 for t, _, _ in melds if t == "kan")
    concealed_trips = 0
    for i, (k, s) in enumerate(sets):
        if k == "trip" and not (not tsumo and i == wait_idx):
            concealed_trips += 1
    for t, mk, open_ in melds:
        if t == "kan" and not open_:
            concealed_trips += 1

    ym = []
    if ctx["first_draw"] and tsumo and not melds:
        ym.append("tenhou" if ctx["seat_wind"] == 27 else "chiihou")
    if concealed_trips == 4:
        ym.append("suuankou")
    if all(d in trips for d in DRAGONS):
        ym.append("daisangen")
    wt = sum(1 for w in WINDS if w in trips)
    if wt == 4:
        ym.append("daisuushi")
    elif wt == 3 and pair in WINDS:
        ym.append("shousuushi")
    if all(k >= 27 for k in kinds):
        ym.append("tsuuiisou")
    if all(k < 27 and k % 9 in (0, 8) for k in kinds):
        ym.append("chinroutou")
    if all(k in GREENS for k in kinds):
        ym.append("ryuuiisou")
    if kans == 4:
        ym.append("suukantsu")
    if closed and not melds:
        suit = {k // 9 for k in kinds if k < 27}
        if len(suit) == 1 and all(k < 27 for k in kinds):
            base = [0] * 9
            for k in kinds:
                base[k % 9] += 1
            want = [3, 1, 1, 1, 1, 1, 1, 1, 3]
            diff = [base[i] - want[i] for i in range(9)]
            if all(d >= 0 for d in diff) and sum(diff) == 1:
                ym.append("chuuren")
    if ym:
        return [(y, 13) for y in ym], len(ym)

    ys = []
    if ctx["riichi"] == 2:
        ys.append(("double_riichi", 2))
    elif ctx["riichi"] == 1:
        ys.append(("riichi", 1))
    if ctx["ippatsu"]:
        ys.append(("ippatsu", 1))
    if closed and tsumo:
        ys.append(("tsumo", 1))
    if (closed and not trips and not kans and wait == "ryanmen"
            and pair not in DRAGONS and pair != ctx["seat_wind"] and pair != ctx["round_wind"]):
        ys.append(("pinfu", 1))
    if all(k < 27 and k % 9 not in (0, 8) for k in kinds):
        ys.append(("tanyao", 1))
    for d in DRAGONS:
        if d in trips:
            ys.append((f"dragon_{d}", 1))
    if ctx["seat_wind"] in trips:
        ys.append(("seat_wind", 1))
    if ctx["round_wind"] in trips:
        ys.append(("round_wind", 1))
    for n in range(7):
        if {n, n + 9, n + 18} <= set(runs):
            ys.append(("sanshoku", 2 if closed else 1))
            break
    for n in range(9):
        if {n, n + 9, n + 18} <= set(trips):
            ys.append(("sanshoku_doukou", 2))
            break
    for s in range(3):
        if {9 * s, 9 * s + 3, 9 * s + 6} <= set(runs):
            ys.append(("ittsu", 2 if closed else 1))
            break
    block_kinds = [[pair]] + [[s, s + 1, s + 2] if k == "run" else [s] for k, s in sets]
    for t, mk, _ in melds:
        block_kinds.append(mk)
    outside = all(any(k in ORPHANS for k in blk) for blk in block_kinds)
    has_run = bool(runs)
    has_honor = any(k >= 27 for k in kinds)
    if outside and has_run:
        if has_honor:
            ys.append(("chanta", 2 if closed else 1))
        else:
            ys.append(("junchan", 3 if closed else 2))
    if not runs:
        ys.append(("toitoi", 2))
    if concealed_trips == 3:
        ys.append(("sanankou", 2))
    if kans == 3:
        ys.append(("sankantsu", 2))
    if outside and not has_run and has_honor:
        ys.append(("honroutou", 2))
    if sum(1 for d in DRAGONS if d in trips) == 2 and pair in DRAGONS:
        ys.append(("shousangen", 2))
    suits = {k // 9 for k in kinds if k < 27}
    if len(suits) == 1:
        if has_honor:
            ys.append(("honitsu", 3 if closed else 2))
        else:
            ys.append(("chinitsu", 6 if closed else 5))
    if ctx["last_tile"]:
        ys.append(("haitei" if tsumo else "houtei", 1))
    if ctx["rinshan"]:
        ys.append(("rinshan", 1))
    if ctx["chankan"]:
        ys.append(("chankan", 1))
    return ys, 0


def fu_of(ctx, pair, sets, melds, wait_idx, wait, yaku_names):
    if "pinfu" in yaku_names:
        return 20 if ctx["tsumo"] else 30
    fu = 20
    for i, (k, s) in enumerate(sets):
        if k == "trip":
            f = 8 if s in ORPHANS else 4
            if not ctx["tsumo"] and i == wait_idx:
                f //= 2
            fu += f
    for t, mk, open_ in melds:
        if t == "pon":
            fu += 4 if mk[0] in ORPHANS else 2
        elif t == "kan":
            f = 16 if mk[0] in ORPHANS else 8
            if not open_:
                f *= 2
            fu += f
    if pair in DRAGONS:
        fu += 2
    if pair == ctx["seat_wind"]:
        fu += 2
    if pair == ctx["round_wind"]:
        fu += 2
    if wait in ("kanchan", "penchan", "tanki"):
        fu += 2
    closed = all(not open_ for _, _, open_ in melds)
    if not ctx["tsumo"] and closed:
        fu += 10
    if ctx["tsumo"]:
        fu += 2
    return (fu + 9) // 10 * 10


def limit_base(fu, han, yakuman):
    if yakuman:
        return 8000 * yakuman
    if han >= 13:
        return 6000
    if han >= 11:
        return 6000
    if han >= 8:
        return 4000
    if han >= 6:
        return 3000
    if han >= 5:
        return 2000
    return min(fu * 2 ** (2 + han), 2000)


def payments(ctx, base):
    def up100(x):
        return (x + 99) // 100 * 100

    deltas = [0, 0, 0, 0]
    w, d = ctx["winner"], ctx["dealer"]
    if ctx["tsumo"]:
        for s in range(4):
            if s == w:
                continue
            share = 2 * base if (w == d or s == d) else base
            pay = up100(share) + 100 * ctx["honba"]
            deltas[s] -= pay
            deltas[w] += pay
    else:
        pay = up100(base * (6 if w == d else 4)) + 300 * ctx["honba"]
        deltas[ctx["loser"]] -= pay
        deltas[w] += pay
    deltas[w] += 1000 * ctx["deposits"]
    return deltas


def _bonus_han(ctx, kinds):
    dora = sum(kinds.count(k) for k in ctx["dora_kinds"])
    ura = sum(kinds.count(k) for k in ctx["ura_kinds"]) if ctx["riichi"] else 0
    return dora + ura + ctx["red_count"]


def score_oracle(ctx):
    """Returns (han, fu, deltas, yakuman_count, yaku_names)."""
    counts = list(ctx["concealed"])
    best = None
    melds = ctx["melds"]

    def consider(names, han_yaku, yakuman, fu, kinds):
        nonlocal best
        if yakuman:
            han, base = 0, 8000 * yakuman
        else:
            if han_yaku == 0:
                return
            han = han_yaku + _bonus_han(ctx, kinds)
            base = limit_base(fu, han, 0)
        key = (base, yakuman, han, fu)
        if best is None or key > best[0]:
            best = (key, (han, fu, payments(ctx, base), yakuman, names))

    if not melds:
        # seven pairs
        if sum(1 for c in counts if c == 2) == 7:
            kinds = [k for k in range(34) for _ in range(counts[k])]
            present = [k for k in range(34) if counts[k]]
            ym = []
            if ctx["first_draw"] and ctx["tsumo"]:
                ym.append("tenhou" if ctx["seat_wind"] == 27 else "chiihou")
            if all(k >= 27 for k in present):
                ym.append("tsuuiisou")
            if ym:
                consider(ym, 0, len(ym), 25, kinds)
            else:
                names = [("chiitoitsu", 2)]
                if ctx["riichi"] == 2:
                    names.append(("double_riichi", 2))
                elif ctx["riichi"] == 1:
                    names.append(("riichi", 1))
                if ctx["ippatsu"]:
                    names.append(("ippatsu", 1))
                if ctx["tsumo"]:
                    names.append(("tsumo", 1))
                if all(k % 9 not in (0, 8) and k < 27 for k in present):
                    names.append(("tanyao", 1))
                if all(k in ORPHANS for k in present):
                    names.append(("honroutou", 2))
                suits = {k // 9 for k in present if k < 27}
                honors = any(k >= 27 for k in present)
                if len(suits) == 1:
                    names.append(("honitsu", 3) if honors else ("chinitsu", 6))
                if ctx["last_tile"]:
                    names.append(("haitei" if ctx["tsumo"] else "houtei", 1))
                consider([n for n, _ in names], sum(h for _, h in names), 0, 25, kinds)
        # kokushi
        present = [k for k in range(34) if counts[k]]
        if (all(k in ORPHANS for k in present) and len(present) == 13
                and sum(counts) == 14):
            n = 1
            if ctx["first_draw"] and ctx["tsumo"]:
                n += 1
            consider(["kokushi"], 0, n, 0, [])

    for pair, sets in enumerate_decs(counts):
        for wait_idx, wait in wait_readings(pair, sets, ctx["win_kind"]):
            names, yakuman = yaku_of(ctx, pair, sets, melds, wait_idx, wait)
            if yakuman:
                kinds = _all_kinds(pair, sets, melds)
                fu = fu_of(ctx, pair, sets, melds, wait_idx, wait, [])
                consider([n for n, _ in names], 0, yakuman, fu, kinds)
            else:
                kinds = _all_kinds(pair, sets, melds)
                fu = fu_of(ctx, pair, sets, melds, wait_idx, wait, [n for n, _ in names])
                consider([n for n, _ in names], sum(h for _, h in names), 0, fu, kinds)

    if best is None:
        return None
    return best[1]
