"""Deterministic SVG rendering of a game state.

Tiles are drawn as rounded rectangles with text labels, no external
assets, so equal states produce byte-identical documents.  The viewer
seat sits at the bottom; other concealed hands render face down unless
the viewer is omniscient.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from ..engine.types import GameState, PH_GAME_END
from ..scoring.yaku import yaku_name
from ..tiles import is_red, kind_label

W = H = 760
TILE_W, TILE_H = 26, 36
GAP = 2

_WIND_EN = ("E", "S", "W", "N")
_WIND_JA = ("東", "南", "西", "北")


def _tile_svg(x: float, y: float, label: str, red: bool = False,
              face_down: bool = False, dim: bool = False,
              marked: bool = False) -> str:
    fill = "#d8d8c8" if face_down else ("#fffef4" if not dim else "#cfcabc")
    stroke = "#c43c3c" if marked else "#55504a"
    parts = [
        f'<rect x="{x:.1f}" y="{y:.1f}" width="{TILE_W}" height="{TILE_H}" '
        f'rx="4" fill="{fill}" stroke="{stroke}" stroke-width="{2 if marked else 1}"/>'
    ]
    if not face_down:
        color = "#c43c3c" if red else "#222222"
        parts.append(
            f'<text x="{x + TILE_W / 2:.1f}" y="{y + TILE_H / 2 + 5:.1f}" '
            f'font-family="monospace" font-size="14" text-anchor="middle" '
            f'fill="{color}">{escape(label)}</text>'
        )
    return "".join(parts)


def _label(tile: int, rule: int, locale: str) -> tuple[str, bool]:
    red = is_red(tile, rule)
    return kind_label(tile >> 2, locale, red), red


def _seat_transform(rel: int) -> str:
    # quadrant translation only; tiles stay horizontal for legible text
    return {
        0: f'translate(40 {H - 150})',
        1: f'translate({W - 250} {H - 330})',
        2: 'translate(40 40)',
        3: 'translate(30 {0})'.format(H - 330 - 230),
    }[rel]


def _render_seat(state: GameState, seat: int, rel: int, show_hand: bool,
                 locale: str) -> str:
    rule = state.config.rule
    hand = state.hands[seat]
    out = [f'<g transform="{_seat_transform(rel)}">']
    wind = (_WIND_JA if locale == "ja" else _WIND_EN)[(seat - state.dealer) % 4]
    riichi_tag = (" riichi" if locale != "ja" else " 立直") if hand.riichi else ""
    out.append(
        f'<text x="0" y="-8" font-family="monospace" font-size="13" fill="#333333">'
        f'{escape(f"{wind} seat {seat}: {state.scores[seat]}{riichi_tag}")}</text>'
    )
    x = 0.0
    for t in hand.concealed:
        if show_hand:
            label, red = _label(t, rule, locale)
            out.append(_tile_svg(x, 0, label, red))
        else:
            out.append(_tile_svg(x, 0, "", face_down=True))
        x += TILE_W + GAP
    x += 10
    for meld in hand.melds:
        for i, t in enumerate(meld.tiles):
            if meld.type == 3 and i in (0, 3):  # closed kan: outer tiles face down
                out.append(_tile_svg(x, 0, "", face_down=True))
            else:
                label, red = _label(t, rule, locale)
                out.append(_tile_svg(x, 0, label, red, dim=True))
            x += TILE_W + GAP
        x += 6
    ry = TILE_H + 10
    for i, rt in enumerate(hand.river):
        col, row = i % 6, i // 6
        label, red = _label(rt.tile, rule, locale)
        out.append(_tile_svg(col * (TILE_W + GAP), ry + row * (TILE_H + GAP),
                             label, red, dim=rt.called, marked=rt.riichi))
    out.append("</g>")
    return "".join(out)


def _center(state: GameState, locale: str) -> str:
    rule = state.config.rule
    kyoku = state.kyoku
    if locale == "ja":
        round_txt = f"{_WIND_JA[0] if kyoku < 4 else _WIND_JA[1]}{kyoku % 4 + 1}局"
        wall_txt = f"残り{state.wall.live_remaining()}"
        honba_txt = f"{state.honba}本場"
    else:
        round_txt = f"{'E' if kyoku < 4 else 'S'}{kyoku % 4 + 1}"
        wall_txt = f"wall {state.wall.live_remaining()}"
        honba_txt = f"honba {state.honba}"
    cx, cy = W / 2, H / 2
    out = [
        f'<rect x="{cx - 120}" y="{cy - 85}" width="240" height="170" rx="8" '
        f'fill="#2e6b46" stroke="#1d4930"/>',
        f'<text x="{cx}" y="{cy - 60}" font-family="monospace" font-size="15" '
        f'text-anchor="middle" fill="#ffffff">'
        f'{escape(f"{round_txt}  {honba_txt}  {wall_txt}")}</text>',
        f'<text x="{cx}" y="{cy - 40}" font-family="monospace" font-size="13" '
        f'text-anchor="middle" fill="#ffffff">'
        f'{escape(f"deposits {state.deposits}" if locale != "ja" else f"供託{state.deposits}")}</text>',
    ]
    x = cx - 90
    for t in state.wall.dora_indicators():
        label, red = _label(t, rule, locale)
        out.append(_tile_svg(x, cy - 25, label, red))
        x += TILE_W + GAP
    return "".join(out)


def _results_panel(state: GameState, locale: str) -> str:
    if not state.results or state.phase != PH_GAME_END:
        return ""
    last = state.results[-1]
    lines = [f"{last.kind}"]
    for w, ws in zip(last.winners, last.win_details):
        if ws.yaku.yakuman_count:
            names = ", ".join(yaku_name(y, locale) for y, _ in ws.yaku.entries)
            lines.append(f"seat {w}: {names}")
        else:
            names = ", ".join(yaku_name(y, locale) for y, _ in ws.yaku.entries)
            lines.append(f"seat {w}: {ws.han} han {ws.fu} fu ({names})")
    lines.append("scores " + " ".join(str(s) for s in state.scores))
    out = [f'<rect x="{W/2 - 170}" y="{H/2 + 95}" width="340" height="{20 * len(lines) + 14}" '
           f'rx="6" fill="#fffdf0" stroke="#555555" opacity="0.95"/>']
    for i, line in enumerate(lines):
        out.append(f'<text x="{W/2}" y="{H/2 + 115 + 20 * i}" font-family="monospace" '
                   f'font-size="12" text-anchor="middle" fill="#222222">{escape(line)}</text>')
    return "".join(out)


def to_svg(state: GameState, viewer: int | None = None, locale: str = "en") -> str:
    """Render a state; `viewer=None` shows every hand face up."""
    if locale not in ("en", "ja"):
        raise ValueError(f"unsupported locale {locale!r}")
    anchor = 0 if viewer is None else viewer
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}">',
        f'<rect width="{W}" height="{H}" fill="#35794f"/>',
        _center(state, locale),
    ]
    for rel in range(4):
        seat = (anchor + rel) % 4
        show = viewer is None or seat == viewer
        parts.append(_render_seat(state, seat, rel, show, locale))
    parts.append(_results_panel(state, locale))
    parts.append("</svg>")
    return "".join(parts)
