"""mjsim: a deterministic four-player riichi mahjong simulator.

Pure-value game engine with a functional init/step/observe environment
API, table-driven hand evaluation, scoring, a batch rollout benchmark, an
SVG renderer, and an HTTP service for human-vs-agent play.
"""

from .env import EnvConfig, EnvState, init, observe, step

__version__ = "0.1.0"

__all__ = ["EnvConfig", "EnvState", "init", "observe", "step", "__version__"]
