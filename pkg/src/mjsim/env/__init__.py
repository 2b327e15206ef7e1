from .core import EnvConfig, EnvState, init, step
from .observe import PAD_TOKEN, Observation, observe, tile_token
from .policies import heuristic_policy, random_policy

__all__ = [
    "EnvConfig",
    "EnvState",
    "Observation",
    "PAD_TOKEN",
    "heuristic_policy",
    "init",
    "observe",
    "random_policy",
    "step",
    "tile_token",
]
