from .runner import (
    BenchConfig,
    BenchReport,
    BenchRow,
    env_game_seed,
    env_policy_state,
    play_games,
    report_to_csv,
    rollout,
    run_shard,
    sweep,
)

__all__ = [
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "env_game_seed",
    "env_policy_state",
    "play_games",
    "report_to_csv",
    "rollout",
    "run_shard",
    "sweep",
]
