import dataclasses
import xml.etree.ElementTree as ET

from mjsim import rng as R
from mjsim.engine import GameConfig, apply_action, new_game
from mjsim.env.policies import random_policy
from mjsim.render import to_svg


def _cjk(text):
    return [c for c in text
            if 0x2E80 <= ord(c) <= 0x9FFF or 0xF900 <= ord(c) <= 0xFAFF]


def sample_states(n_games=4, stride=13, seed0=0):
    states = []
    for seed in range(seed0, seed0 + n_games):
        st = new_game(GameConfig(), seed)
        pol = R.seed_state(seed)
        i = 0
        while not (st.terminated or st.truncated):
            if i % stride == 0:
                states.append(st)
            a, pol = random_policy(st.legal, pol)
            st = apply_action(st, a)
            i += 1
        states.append(st)
    return states


class TestWellFormed:
    def test_parses_as_xml(self):
        for st in sample_states():
            for viewer in (None, 0, 2):
                ET.fromstring(to_svg(st, viewer=viewer))

    def test_terminal_state_renders_results(self):
        st = sample_states(1)[0]
        final = sample_states(1)[-1]
        svg = to_svg(final, viewer=None)
        ET.fromstring(svg)

    def test_locales(self):
        st = sample_states(1)[2]
        en = to_svg(st, viewer=0, locale="en")
        ja = to_svg(st, viewer=0, locale="ja")
        assert _cjk(en) == []
        assert _cjk(ja)  # ideograms present


class TestDeterminismAndLeaks:
    def test_byte_identical(self):
        st = sample_states(1)[1]
        assert to_svg(st, viewer=1) == to_svg(st, viewer=1)

    def test_viewer_cannot_see_opponent_hands(self):
        states = [s for s in sample_states(2)
                  if s.actor == 0 and not s.terminated
                  and len(s.hands[1].concealed) == len(s.hands[2].concealed)]
        st = states[-1]
        h1, h2 = st.hands[1], st.hands[2]
        swap12 = dataclasses.replace(
            h1, concealed=h2.concealed, counts=h2.counts, codes=h2.codes,
            shanten=h2.shanten, waits=h2.waits)
        swap21 = dataclasses.replace(
            h2, concealed=h1.concealed, counts=h1.counts, codes=h1.codes,
            shanten=h1.shanten, waits=h1.waits)
        swapped = dataclasses.replace(st, hands=(st.hands[0], swap12, swap21, st.hands[3]))
        # the viewer-0 document must not depend on opponents' concealed tiles
        assert to_svg(st, viewer=0) == to_svg(swapped, viewer=0)

    def test_omniscient_shows_all(self):
        st = sample_states(1)[3]
        svg = to_svg(st, viewer=None)
        closed_kan_backs = sum(
            2 for s in range(4) for m in st.hands[s].melds if m.type == 3)
        assert svg.count('fill="#d8d8c8"') == closed_kan_backs

    def test_face_down_counts(self):
        st = sample_states(1)[2]
        svg = to_svg(st, viewer=0)
        hidden = sum(len(st.hands[s].concealed) for s in range(4) if s != 0)
        closed_kan_backs = sum(
            2 for s in range(4) for m in st.hands[s].melds if m.type == 3)
        assert svg.count('fill="#d8d8c8"') == hidden + closed_kan_backs
