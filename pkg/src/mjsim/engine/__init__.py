from .types import (
    EV_NAMES,
    GameConfig,
    HandState,
    IllegalActionError,
    MODE_EAST,
    MODE_HALF,
    MODE_NAMES,
    MODE_SINGLE,
    PH_ACT,
    PH_CALL,
    PH_GAME_END,
    GameState,
)
from .engine import apply_action, legal_actions, new_game
from .state import check_invariants, serialize_state, state_fingerprint
from .log import GameRecorder, replay_log

__all__ = [
    "EV_NAMES",
    "GameConfig",
    "GameRecorder",
    "GameState",
    "HandState",
    "IllegalActionError",
    "MODE_EAST",
    "MODE_HALF",
    "MODE_NAMES",
    "MODE_SINGLE",
    "PH_ACT",
    "PH_CALL",
    "PH_GAME_END",
    "apply_action",
    "check_invariants",
    "legal_actions",
    "new_game",
    "replay_log",
    "serialize_state",
    "state_fingerprint",
]
