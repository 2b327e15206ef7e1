"""Command line: throughput benchmarks, log rendering, self-play, the
game service."""

from __future__ import annotations

import argparse
import json
import sys


def _parse_sweep(text: str) -> list[int]:
    """'2..16384' doubles from low to high; 'a,b,c' lists sizes."""
    if ".." in text:
        lo, hi = (int(x) for x in text.split("..", 1))
        sizes = []
        b = lo
        while b <= hi:
            sizes.append(b)
            b *= 2
        return sizes
    return [int(x) for x in text.split(",")]


def _cmd_bench(args) -> int:
    from .bench import BenchConfig, report_to_csv, sweep

    config = BenchConfig(rule=args.rule, mode=args.mode, steps=args.steps,
                         seed=args.seed, threads=args.threads)
    sizes = _parse_sweep(args.sweep) if args.sweep else [args.batch]
    report = sweep(sizes, config)
    csv = report_to_csv(report)
    if args.out:
        with open(args.out, "w") as f:
            f.write(csv)
    sys.stdout.write(csv)
    return 0


def _cmd_selfplay(args) -> int:
    from .bench.runner import env_policy_state
    from .engine import GameRecorder
    from .env import EnvConfig, heuristic_policy, init, observe, random_policy, step
    from .engine.log import log_to_json

    config = EnvConfig(rule=args.rule, mode=args.mode)
    state = init(args.seed, config)
    recorder = GameRecorder(config.game_config(), args.seed)
    policy_rng = env_policy_state(args.seed, 0)
    while not (state.terminated or state.truncated):
        if args.policy == "heuristic":
            action = heuristic_policy(observe(state, state.current_player), state.legal)
        else:
            action, policy_rng = random_policy(state.legal, policy_rng)
        recorder.record(state.game, action)
        state = step(state, action)
    log = recorder.to_log(state.game)
    text = log_to_json(log)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text + "\n")
    print(f"scores: {list(state.game.scores)}", file=sys.stderr)
    return 0


def _cmd_render(args) -> int:
    from .engine.log import replay_log
    from .render import to_svg

    with open(args.log) as f:
        log = json.load(f)
    state = replay_log(log, upto=args.step)
    viewer = None if args.viewer is None or args.viewer < 0 else args.viewer
    svg = to_svg(state, viewer=viewer, locale=args.locale)
    if args.out:
        with open(args.out, "w") as f:
            f.write(svg)
    else:
        sys.stdout.write(svg + "\n")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(state_dir=args.state_dir, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="mjsim")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench", help="throughput benchmark")
    p.add_argument("--rule", choices=["red", "no-red"], default="red")
    p.add_argument("--mode", choices=["single", "east", "half"], default="single")
    p.add_argument("--batch", type=int, default=1024)
    p.add_argument("--sweep", help="e.g. 2..16384 (doubling) or 2,8,32")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", help="CSV output path")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("selfplay", help="play one game, write its log")
    p.add_argument("--rule", choices=["red", "no-red"], default="red")
    p.add_argument("--mode", choices=["single", "east", "half"], default="single")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--policy", choices=["random", "heuristic"], default="random")
    p.add_argument("--out", help="log JSON path")
    p.set_defaults(func=_cmd_selfplay)

    p = sub.add_parser("render", help="render a log position to SVG")
    p.add_argument("--log", required=True)
    p.add_argument("--step", type=int, default=None, help="actions to replay")
    p.add_argument("--viewer", type=int, default=None, help="seat, omit for omniscient")
    p.add_argument("--locale", choices=["en", "ja"], default="en")
    p.add_argument("--out", help="SVG output path")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("serve", help="run the game service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--static", help="directory of built UI assets")
    p.add_argument("--state-dir", help="session persistence directory")
    p.set_defaults(func=_cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
