"""HTTP/JSON surface for human-vs-agent play.

POST /games, GET /games/{id}?seat=k, POST /games/{id}/actions,
GET /games/{id}/svg?seat=k, GET /games/{id}/log, GET /health.
Illegal input is rejected before it reaches the engine, with the legal
mask echoed back; sessions always return either terminal or waiting on a
human seat.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .. import actions as A
from ..engine import serialize_state
from ..engine.engine import final_ranks
from ..env import EnvConfig, observe
from ..render import to_svg
from ..scoring.yaku import yaku_name
from .sessions import AGENT_KINDS, SessionStore, advance_agents, apply_session_action

_ACTION_TABLE = A.action_table()


class NewGameRequest(BaseModel):
    rule: str = "red"
    mode: str = "single"
    seed: int | None = None
    human_seats: list[int] = Field(default_factory=lambda: [0])
    agents: dict[int, str] = Field(default_factory=dict)
    locale: str = "en"


class ActionRequest(BaseModel):
    seat: int
    action: int


def _view(session, seat: int, locale: str = "en") -> dict:
    state = session.state
    game = state.game
    terminal = state.terminated or state.truncated
    my_turn = not terminal and state.current_player == seat
    view = {
        "game_id": session.id,
        "seat": seat,
        "current_player": None if terminal else state.current_player,
        "terminated": state.terminated,
        "truncated": state.truncated,
        "waiting_on_you": my_turn,
        "observation": observe(state, seat).to_dict(),
        "legal_actions": list(state.legal) if my_turn else [],
        "legal_action_mask": [bool((state.legal_mask_int >> a) & 1) if my_turn else False
                              for a in range(A.NUM_ACTIONS)],
        "action_table": _ACTION_TABLE,
        "svg": to_svg(game, viewer=seat, locale=locale),
        "scores": list(game.scores),
        "kyoku": game.kyoku,
        "honba": game.honba,
        "deposits": game.deposits,
        "results": serialize_state(game)["results"],
        "yaku_names": {str(i): yaku_name(i, locale) for i in range(40)},
    }
    if terminal:
        view["final"] = {
            "scores": list(game.scores),
            "ranks": list(final_ranks(game.scores)),
            "rewards": list(state.rewards),
        }
    return view


def create_app(state_dir: str | Path | None = None,
               static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="mjsim game service")
    store = SessionStore(state_dir)
    app.state.store = store

    @app.get("/health")
    def health():
        return {"status": "ok", "sessions": len(store.sessions)}

    @app.post("/games")
    def create_game(req: NewGameRequest):
        try:
            config = EnvConfig(rule=req.rule, mode=req.mode)
        except ValueError as e:
            raise HTTPException(status_code=422, detail=str(e))
        for seat in req.human_seats:
            if not 0 <= seat <= 3:
                raise HTTPException(status_code=422, detail=f"bad seat {seat}")
        seed = req.seed
        if seed is None:
            import secrets

            seed = secrets.randbits(48)
        agents = {}
        for seat in range(4):
            if seat in req.human_seats:
                continue
            kind = req.agents.get(seat, "heuristic")
            if kind not in AGENT_KINDS:
                raise HTTPException(status_code=422, detail=f"bad agent kind {kind!r}")
            agents[seat] = kind
        session = store.create(config, seed, req.human_seats, agents)
        seat = req.human_seats[0] if req.human_seats else 0
        return _view(session, seat, req.locale)

    def _session_or_404(game_id: str):
        session = store.get(game_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"no session {game_id}")
        return session

    @app.get("/games/{game_id}")
    def get_game(game_id: str, seat: int = 0, locale: str = "en"):
        session = _session_or_404(game_id)
        terminal = session.state.terminated or session.state.truncated
        if seat not in session.human_seats and not terminal:
            raise HTTPException(status_code=403,
                                detail=f"seat {seat} is not a human seat")
        return _view(session, seat, locale)

    @app.post("/games/{game_id}/actions")
    def post_action(game_id: str, req: ActionRequest, locale: str = "en"):
        session = _session_or_404(game_id)
        with session.lock:
            state = session.state
            if state.terminated or state.truncated:
                raise HTTPException(status_code=409, detail="game is over")
            if req.seat not in session.human_seats:
                raise HTTPException(status_code=403,
                                    detail=f"seat {req.seat} is not a human seat")
            if state.current_player != req.seat:
                raise HTTPException(status_code=409,
                                    detail=f"not seat {req.seat}'s turn")
            if req.action not in state.legal:
                raise HTTPException(status_code=422, detail={
                    "error": "illegal action",
                    "action": req.action,
                    "legal_actions": list(state.legal),
                })
            apply_session_action(session, req.action)
            advance_agents(session)
            store.persist(session)
            return _view(session, req.seat, locale)

    @app.get("/games/{game_id}/svg")
    def get_svg(game_id: str, seat: int = 0, locale: str = "en"):
        session = _session_or_404(game_id)
        svg = to_svg(session.state.game, viewer=seat, locale=locale)
        return Response(content=svg, media_type="image/svg+xml")

    @app.get("/games/{game_id}/log")
    def get_log(game_id: str):
        session = _session_or_404(game_id)
        return session.recorder.to_log(session.state.game)

    if static_dir:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")
    return app
