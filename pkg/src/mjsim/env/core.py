"""Functional environment facade: init / step with terminal-only rewards.

A legal action steps the engine; an illegal action terminates the episode
with the penalty at the offending seat and zeros elsewhere.  Rewards are
emitted exactly once, when the episode ends (or is truncated), under one
of two schemes: normalized score delta, or fixed rank payoffs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import actions as A
from ..engine import GameConfig, GameState, apply_action, new_game
from ..engine.engine import final_ranks
from ..engine.types import MODE_NAMES, START_SCORE
from ..tiles import ContractError, RULE_NO_RED, RULE_RED

RANK_REWARDS = (1.0, 0.333, -0.333, -1.0)

_RULE_IDS = {"red": RULE_RED, "no-red": RULE_NO_RED}
_MODE_IDS = {v: k for k, v in MODE_NAMES.items()}


@dataclass(frozen=True)
class EnvConfig:
    rule: str = "red"
    mode: str = "single"
    illegal_penalty: float = -1.0
    reward_scheme: str = "score_delta"  # score_delta | rank
    max_steps: int = 10_000

    def __post_init__(self):
        if self.rule not in _RULE_IDS:
            raise ValueError(f"bad rule {self.rule!r}")
        if self.mode not in _MODE_IDS:
            raise ValueError(f"bad mode {self.mode!r}")
        if self.reward_scheme not in ("score_delta", "rank"):
            raise ValueError(f"bad reward scheme {self.reward_scheme!r}")
        if self.illegal_penalty > 0:
            raise ValueError("illegal penalty must be <= 0")

    def game_config(self) -> GameConfig:
        return GameConfig(rule=_RULE_IDS[self.rule], mode=_MODE_IDS[self.mode],
                          max_steps=self.max_steps)


@dataclass(frozen=True)
class EnvState:
    config: EnvConfig
    game: GameState
    current_player: int
    legal: tuple[int, ...]
    legal_mask_int: int
    rewards: tuple[float, float, float, float]
    terminated: bool
    truncated: bool

    @property
    def legal_action_mask(self) -> tuple[bool, ...]:
        m = self.legal_mask_int
        return tuple(bool((m >> a) & 1) for a in range(A.NUM_ACTIONS))


def _wrap(config: EnvConfig, game: GameState) -> EnvState:
    if game.terminated or game.truncated:
        rewards = _terminal_rewards(config, game)
        return EnvState(config, game, game.actor, (), 0, rewards,
                        game.terminated, game.truncated)
    return EnvState(config, game, game.actor, game.legal, game.legal_mask,
                    (0.0, 0.0, 0.0, 0.0), False, False)


def _terminal_rewards(config: EnvConfig, game: GameState) -> tuple:
    if config.reward_scheme == "rank":
        ranks = final_ranks(game.scores)
        return tuple(RANK_REWARDS[r] for r in ranks)
    return tuple((s - START_SCORE) / START_SCORE for s in game.scores)


def init(seed: int, config: EnvConfig = EnvConfig()) -> EnvState:
    return _wrap(config, new_game(config.game_config(), seed))


def step(state: EnvState, action: int) -> EnvState:
    """Apply one action; masked-off actions terminate with the penalty."""
    if state.terminated or state.truncated:
        raise ContractError("cannot step a finished episode")
    if not 0 <= action < A.NUM_ACTIONS or not (state.legal_mask_int >> action) & 1:
        rewards = [0.0, 0.0, 0.0, 0.0]
        rewards[state.current_player] = state.config.illegal_penalty
        return EnvState(state.config, state.game, state.current_player, (), 0,
                        tuple(rewards), True, False)
    return _wrap(state.config, apply_action(state.game, action))
