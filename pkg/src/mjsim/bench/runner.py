"""Batched random-policy rollouts and the throughput sweep.

Environments are partitioned into contiguous shards, one per worker
process; each worker steps its shard synchronously with no cross-env
communication, so batch trajectories are identical to standalone runs
and independent of the worker count.  Per-env randomness derives from
the env index, never from scheduling.
"""

from __future__ import annotations

import hashlib
import os
import platform
import time
from dataclasses import dataclass, field

from .. import rng as R
from ..engine import check_invariants, state_fingerprint
from ..env import EnvConfig, init, random_policy, step

_POLICY_STREAM = 1


def env_game_seed(seed: int, index: int, reset: int = 0) -> int:
    """Seed of env `index` for its `reset`-th game."""
    env_key = R.derive_key(R.seed_state(seed).key, index)
    return R.derive_key(env_key, 2 + reset)


def env_policy_state(seed: int, index: int) -> R.RngState:
    env_key = R.derive_key(R.seed_state(seed).key, index)
    return R.RngState(R.derive_key(env_key, _POLICY_STREAM), 0)


@dataclass(frozen=True)
class BenchConfig:
    rule: str = "red"
    mode: str = "single"
    batch: int = 2
    steps: int = 100
    seed: int = 0
    threads: int | None = None  # None = all cores

    def resolved_threads(self) -> int:
        t = self.threads or os.cpu_count() or 1
        return max(1, min(t, self.batch))


@dataclass(frozen=True)
class BenchRow:
    batch: int
    wall_seconds: float
    steps_per_second: float
    games_completed: int


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    metadata: dict = field(default_factory=dict)


def run_shard(rule: str, mode: str, seed: int, indices, steps: int,
              collect_digests: bool = False, warm_seconds: float = 0.0,
              min_duration: float = 0.0) -> dict:
    """Step every env in `indices` for `steps` iterations with auto-reset.

    Returns wall time of one stepping pass (construction excluded),
    completed-game count, and optional per-env trajectory digests.
    `warm_seconds` busy-steps a scratch env first, and `min_duration`
    repeats the timed pass until that much wall time accumulated,
    reporting the mean pass time; both keep short measurements out of
    host burst regimes and have no effect on trajectories.
    """
    config = EnvConfig(rule=rule, mode=mode)
    envs = []
    for i in indices:
        envs.append({
            "state": init(env_game_seed(seed, i), config),
            "policy": env_policy_state(seed, i),
            "resets": 0,
            "digest": hashlib.sha256() if collect_digests else None,
        })
    if warm_seconds > 0:
        scratch = init(env_game_seed(seed, 1 << 32), config)
        scratch_pol = env_policy_state(seed, 1 << 32)
        resets = 0
        t_end = time.perf_counter() + warm_seconds
        while time.perf_counter() < t_end:
            if scratch.terminated or scratch.truncated:
                resets += 1
                scratch = init(env_game_seed(seed, 1 << 32, resets), config)
            action, scratch_pol = random_policy(scratch.legal, scratch_pol)
            scratch = step(scratch, action)

    def one_pass(count_games: bool) -> float:
        nonlocal games
        t0 = time.perf_counter()
        # envs are independent, so each runs its step budget consecutively;
        # that keeps one env's state hot instead of cycling the shard
        for j, e in enumerate(envs):
            st = e["state"]
            policy = e["policy"]
            digest = e["digest"]
            for _ in range(steps):
                if st.terminated or st.truncated:
                    e["resets"] += 1
                    st = init(env_game_seed(seed, indices[j], e["resets"]), config)
                action, policy = random_policy(st.legal, policy)
                nxt = step(st, action)
                if digest is not None:
                    digest.update(action.to_bytes(2, "little"))
                    if nxt.terminated or nxt.truncated:
                        digest.update(state_fingerprint(nxt.game).encode())
                if count_games and (nxt.terminated or nxt.truncated):
                    games += 1
                st = nxt
            e["state"] = st
            e["policy"] = policy
        return time.perf_counter() - t0

    games = 0
    elapsed = one_pass(count_games=True)
    passes = 1
    while elapsed < min_duration:
        elapsed += one_pass(count_games=False)
        passes += 1
    out = {"elapsed": elapsed / passes, "games": games, "steps": steps * len(envs)}
    if collect_digests:
        out["digests"] = {i: e["digest"].hexdigest() for i, e in zip(indices, envs)}
    return out


def _shards(batch: int, workers: int) -> list[list[int]]:
    base, extra = divmod(batch, workers)
    shards = []
    start = 0
    for w in range(workers):
        n = base + (1 if w < extra else 0)
        shards.append(list(range(start, start + n)))
        start += n
    return [s for s in shards if s]


_POOL = None
_POOL_SIZE = 0


def _get_pool(workers: int):
    global _POOL, _POOL_SIZE
    if _POOL is None or _POOL_SIZE < workers:
        if _POOL is not None:
            _POOL.close()
        import multiprocessing as mp

        _POOL = mp.get_context("fork").Pool(workers)
        _POOL_SIZE = workers
    return _POOL


def rollout(config: BenchConfig, collect_digests: bool = False,
            warmup: bool = True, min_duration: float = 0.0) -> tuple[BenchRow, dict]:
    """One timed batch rollout; wall time is the slowest worker's stepping
    section, so process startup, dealing, and clock warm-up stay out of
    the measurement."""
    workers = config.resolved_threads()
    shards = _shards(config.batch, workers)
    warm = 0.25 if warmup else 0.0
    if collect_digests:
        min_duration = 0.0  # digests need exactly one pass per env
    args = [(config.rule, config.mode, config.seed, s, config.steps,
             collect_digests, warm, min_duration) for s in shards]
    if workers == 1 or len(shards) == 1:
        results = [run_shard(*a) for a in args]
    else:
        pool = _get_pool(workers)
        results = pool.starmap(run_shard, args)
    wall = max(r["elapsed"] for r in results)
    games = sum(r["games"] for r in results)
    total_steps = config.batch * config.steps
    row = BenchRow(config.batch, wall, total_steps / wall, games)
    digests = {}
    if collect_digests:
        for r in results:
            digests.update(r["digests"])
    return row, digests


def sweep(batch_sizes, config: BenchConfig, repeats: int = 1) -> BenchReport:
    """One rollout per batch size; with `repeats` > 1 each size is measured
    several times and the fastest coherent run is kept, which filters
    scheduler noise on small batches."""
    rows = []
    for batch in batch_sizes:
        cfg = BenchConfig(rule=config.rule, mode=config.mode, batch=batch,
                          steps=config.steps, seed=config.seed,
                          threads=config.threads)
        row, _ = rollout(cfg, min_duration=0.8)
        for _ in range(repeats - 1):
            again, _ = rollout(cfg, min_duration=0.8)
            if again.steps_per_second > row.steps_per_second:
                row = again
        rows.append(row)
    meta = {
        "rule": config.rule,
        "mode": config.mode,
        "steps": config.steps,
        "seed": config.seed,
        "threads": config.threads or os.cpu_count() or 1,
        "cpu_count": os.cpu_count(),
        "platform": platform.platform(),
        "python": platform.python_version(),
    }
    return BenchReport(tuple(rows), meta)


def report_to_csv(report: BenchReport) -> str:
    lines = [f"# {k}={v}" for k, v in sorted(report.metadata.items())]
    lines.append("batch,wall_seconds,steps_per_second,games_completed")
    for r in report.rows:
        lines.append(f"{r.batch},{r.wall_seconds:.6f},{r.steps_per_second:.2f},{r.games_completed}")
    return "\n".join(lines) + "\n"


def play_games(rule: str, mode: str, seed: int, n_games: int,
               check: bool = True, illegal_probe_every: int = 37) -> dict:
    """Play complete random-policy games, checking invariants each step.

    Used by the soak suite; returns violation messages (empty when clean)
    and step-count statistics.
    """
    from ..actions import NUM_ACTIONS, RON
    from ..engine import IllegalActionError, apply_action
    from ..engine.types import PH_CALL

    config = EnvConfig(rule=rule, mode=mode)
    violations = []
    max_kyoku_steps = 0
    max_game_steps = 0
    games_truncated = 0
    probe = 0
    for g in range(n_games):
        st = init(env_game_seed(seed, g), config)
        policy = env_policy_state(seed, g)
        steps = 0
        kyoku_start_step = 0
        kyoku_seen = 0
        while not (st.terminated or st.truncated):
            game = st.game
            if check:
                try:
                    check_invariants(game, fast=True)
                except AssertionError as e:
                    violations.append(f"game {g} step {steps}: {e}")
                    if len(violations) > 20:
                        return _soak_result(violations, max_kyoku_steps,
                                            max_game_steps, games_truncated, g + 1)
                if game.phase == PH_CALL and RON in game.legal:
                    if game.hands[game.actor].furiten():
                        violations.append(f"game {g} step {steps}: furiten ron offered")
                probe += 1
                if probe % illegal_probe_every == 0:
                    bad = next(a for a in range(NUM_ACTIONS) if a not in game.legal)
                    try:
                        apply_action(game, bad)
                        violations.append(f"game {g} step {steps}: illegal action accepted")
                    except IllegalActionError:
                        pass
            if len(game.results) > kyoku_seen:
                kyoku_seen = len(game.results)
                kyoku_start_step = steps
            action, policy = random_policy(st.legal, policy)
            st = step(st, action)
            steps += 1
            if steps - kyoku_start_step > 344:
                violations.append(f"game {g}: kyoku exceeded 344 steps")
                break
        max_kyoku_steps = max(max_kyoku_steps, steps - kyoku_start_step)
        max_game_steps = max(max_game_steps, steps)
        if st.truncated:
            games_truncated += 1
    return _soak_result(violations, max_kyoku_steps, max_game_steps,
                        games_truncated, n_games)


def _soak_result(violations, max_kyoku_steps, max_game_steps, truncated, games):
    return {
        "violations": violations,
        "max_kyoku_steps": max_kyoku_steps,
        "max_game_steps": max_game_steps,
        "games_truncated": truncated,
        "games": games,
    }
