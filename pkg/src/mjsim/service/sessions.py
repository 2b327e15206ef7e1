"""Game sessions: one env per session, agents auto-advance between
human decisions, JSON-file persistence by action replay."""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from .. import rng as R
from ..engine import GameRecorder
from ..env import EnvConfig, EnvState, heuristic_policy, init, observe, random_policy, step

AGENT_KINDS = ("random", "heuristic")


@dataclass
class Session:
    id: str
    seed: int
    config: EnvConfig
    human_seats: tuple[int, ...]
    agents: dict[int, str]  # seat -> agent kind for non-human seats
    state: EnvState
    recorder: GameRecorder
    actions: list[tuple[int, int]] = field(default_factory=list)
    agent_rng: dict[int, R.RngState] = field(default_factory=dict)
    created_at: float = field(default_factory=time.time)
    updated_at: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def waiting_on(self) -> int | None:
        if self.state.terminated or self.state.truncated:
            return None
        return self.state.current_player


def _agent_state(seed: int, seat: int) -> R.RngState:
    return R.RngState(R.derive_key(R.seed_state(seed).key, 100 + seat), 0)


def new_session(config: EnvConfig, seed: int, human_seats, agents) -> Session:
    sid = secrets.token_hex(8)
    state = init(seed, config)
    session = Session(
        id=sid, seed=seed, config=config,
        human_seats=tuple(sorted(human_seats)),
        agents=dict(agents),
        state=state,
        recorder=GameRecorder(config.game_config(), seed),
        agent_rng={s: _agent_state(seed, s) for s in agents},
    )
    advance_agents(session)
    return session


def apply_session_action(session: Session, action: int) -> None:
    session.recorder.record(session.state.game, action)
    session.actions.append((session.state.current_player, action))
    session.state = step(session.state, action)
    session.updated_at = time.time()


def advance_agents(session: Session) -> None:
    """Step agent seats until a human must act or the game ends."""
    while True:
        seat = session.waiting_on()
        if seat is None or seat in session.human_seats:
            return
        kind = session.agents.get(seat, "heuristic")
        if kind == "random":
            action, session.agent_rng[seat] = random_policy(
                session.state.legal, session.agent_rng[seat])
        else:
            action = heuristic_policy(observe(session.state, seat), session.state.legal)
        apply_session_action(session, action)


class SessionStore:
    """In-memory sessions with JSON persistence on every mutation.

    The persisted form is (seed, config, action list); loading replays
    the actions, so a store survives restarts without storing states.
    """

    def __init__(self, state_dir: str | Path | None = None):
        self.sessions: dict[str, Session] = {}
        self.state_dir = Path(state_dir) if state_dir else None
        if self.state_dir:
            self.state_dir.mkdir(parents=True, exist_ok=True)
            for f in sorted(self.state_dir.glob("*.json")):
                try:
                    self._load_file(f)
                except (ValueError, KeyError, OSError):
                    continue

    def create(self, config: EnvConfig, seed: int, human_seats, agents) -> Session:
        session = new_session(config, seed, human_seats, agents)
        self.sessions[session.id] = session
        self.persist(session)
        return session

    def get(self, sid: str) -> Session | None:
        return self.sessions.get(sid)

    def persist(self, session: Session) -> None:
        if not self.state_dir:
            return
        doc = {
            "id": session.id,
            "seed": session.seed,
            "config": {
                "rule": session.config.rule,
                "mode": session.config.mode,
                "reward_scheme": session.config.reward_scheme,
                "max_steps": session.config.max_steps,
            },
            "human_seats": list(session.human_seats),
            "agents": {str(k): v for k, v in session.agents.items()},
            "actions": [list(a) for a in session.actions],
            "created_at": session.created_at,
            "updated_at": session.updated_at,
        }
        path = self.state_dir / f"{session.id}.json"
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, sort_keys=True))
        tmp.replace(path)

    def _load_file(self, path: Path) -> None:
        doc = json.loads(path.read_text())
        config = EnvConfig(**doc["config"])
        session = Session(
            id=doc["id"], seed=doc["seed"], config=config,
            human_seats=tuple(doc["human_seats"]),
            agents={int(k): v for k, v in doc["agents"].items()},
            state=init(doc["seed"], config),
            recorder=GameRecorder(config.game_config(), doc["seed"]),
            agent_rng={int(k): _agent_state(doc["seed"], int(k))
                       for k in doc["agents"]},
            created_at=doc.get("created_at", time.time()),
        )
        for seat, action in doc["actions"]:
            apply_session_action(session, action)
        self.sessions[session.id] = session
