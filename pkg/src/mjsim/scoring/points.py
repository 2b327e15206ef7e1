"""Base points, limit caps, and seat settlement."""

from __future__ import annotations

from dataclasses import dataclass

from .context import NoYakuError

MANGAN = 2000
HANEMAN = 3000
BAIMAN = 4000
SANBAIMAN = 6000
YAKUMAN = 8000


def ceil100(x: int) -> int:
    return -(-x // 100) * 100


def base_points(fu: int, han: int, yakuman_count: int = 0, kazoe: bool = False) -> int:
    """fu * 2^(2+han) with the standard limit caps; counted yakuman only
    when `kazoe` is enabled, otherwise 13+ han stays at the triple-limit cap."""
    if yakuman_count:
        return YAKUMAN * yakuman_count
    if han <= 0:
        raise NoYakuError("a win needs at least one yaku")
    if han >= 13:
        return YAKUMAN if kazoe else SANBAIMAN
    if han >= 11:
        return SANBAIMAN
    if han >= 8:
        return BAIMAN
    if han >= 6:
        return HANEMAN
    if han >= 5:
        return MANGAN
    return min(fu * (1 << (2 + han)), MANGAN)


def limit_name(base: int, yakuman_count: int) -> str:
    if yakuman_count:
        return "yakuman" if yakuman_count == 1 else f"{yakuman_count}x yakuman"
    return {MANGAN: "mangan", HANEMAN: "haneman", BAIMAN: "baiman",
            SANBAIMAN: "sanbaiman"}.get(base, "")


@dataclass(frozen=True)
class Settlement:
    """Point deltas for the four seats; sums to 1000 * deposits_claimed."""

    deltas: tuple[int, int, int, int]
    honba_component: int = 0
    deposits_claimed: int = 0


def settle(win_type: str, base: int, dealer_seat: int, winner_seat: int,
           loser_seat: int | None, honba: int, deposits: int) -> Settlement:
    """Standard payments: ron pays 6x/4x base from the discarder; tsumo
    splits 2x/1x (all 2x for a dealer win), each share rounded up to 100.
    Honba add 100 per payer on tsumo or 300 from the discarder on ron;
    the winner also claims 1000 per table deposit."""
    deltas = [0, 0, 0, 0]
    dealer_win = winner_seat == dealer_seat
    if win_type == "ron":
        if loser_seat is None or loser_seat == winner_seat:
            raise ValueError("ron needs a distinct loser seat")
        pay = ceil100(base * (6 if dealer_win else 4)) + 300 * honba
        deltas[loser_seat] -= pay
        deltas[winner_seat] += pay
        honba_component = 300 * honba
    elif win_type == "tsumo":
        if loser_seat is not None:
            raise ValueError("tsumo has no loser seat")
        honba_component = 0
        for seat in range(4):
            if seat == winner_seat:
                continue
            share = 2 * base if (dealer_win or seat == dealer_seat) else base
            pay = ceil100(share) + 100 * honba
            deltas[seat] -= pay
            deltas[winner_seat] += pay
            honba_component += 100 * honba
    else:
        raise ValueError(f"bad win type {win_type!r}")
    deltas[winner_seat] += 1000 * deposits
    return Settlement(tuple(deltas), honba_component, deposits)
