"""Replayable game logs ("mjlog-lite v1").

A log carries the seed, config, and the applied action sequence, which is
sufficient to reproduce the game exactly; events and per-kyoku results are
included for consumers that do not want to re-simulate.
"""

from __future__ import annotations

import json

from ..tiles import RULE_NO_RED, RULE_RED
from .engine import apply_action, final_ranks, new_game
from .state import _result_dict, state_fingerprint
from .types import EV_NAMES, MODE_NAMES, GameConfig, GameState

LOG_VERSION = "mjlog-lite-v1"

_MODE_IDS = {v: k for k, v in MODE_NAMES.items()}


def config_to_dict(config: GameConfig) -> dict:
    return {
        "rule": "no-red" if config.rule == RULE_NO_RED else "red",
        "mode": MODE_NAMES[config.mode],
        "kazoe": config.kazoe,
        "double_yakuman": config.double_yakuman,
        "agari_yame": config.agari_yame,
        "max_steps": config.max_steps,
        "renchan_cap": config.renchan_cap,
    }


def config_from_dict(d: dict) -> GameConfig:
    return GameConfig(
        rule=RULE_NO_RED if d["rule"] == "no-red" else RULE_RED,
        mode=_MODE_IDS[d["mode"]],
        kazoe=d.get("kazoe", False),
        double_yakuman=d.get("double_yakuman", False),
        agari_yame=d.get("agari_yame", True),
        max_steps=d.get("max_steps", 10_000),
        renchan_cap=d.get("renchan_cap", 32),
    )


class GameRecorder:
    """Collects the action sequence while a game is stepped."""

    def __init__(self, config: GameConfig, seed: int):
        self.config = config
        self.seed = seed
        self.actions: list[tuple[int, int]] = []

    def record(self, state: GameState, action: int) -> None:
        self.actions.append((state.actor, action))

    def to_log(self, final_state: GameState) -> dict:
        return {
            "version": LOG_VERSION,
            "seed": self.seed,
            "config": config_to_dict(self.config),
            "actions": [[seat, action] for seat, action in self.actions],
            "events": [
                {"type": EV_NAMES[t], "actor": a, "tile": tile}
                for t, a, tile in final_state.events()
            ],
            "results": [_result_dict(r) for r in final_state.results],
            "final_scores": list(final_state.scores),
            "ranks": list(final_ranks(final_state.scores)),
            "terminated": final_state.terminated,
            "truncated": final_state.truncated,
            "fingerprint": state_fingerprint(final_state),
        }


def log_to_json(log: dict) -> str:
    return json.dumps(log, sort_keys=True, separators=(",", ":"))


def replay_log(log: dict, upto: int | None = None) -> GameState:
    """Re-simulate a log; `upto` stops after that many actions."""
    config = config_from_dict(log["config"])
    state = new_game(config, log["seed"])
    actions = log["actions"] if upto is None else log["actions"][:upto]
    for seat, action in actions:
        if state.actor != seat:
            raise ValueError(f"log desync: expected actor {state.actor}, log says {seat}")
        state = apply_action(state, action)
    return state
