"""Record service views as fixtures for the frontend tests.

Plays scripted games through the HTTP surface and stores every view the
UI would render (each human decision point plus terminals).
"""

import json
import pathlib
import sys

from fastapi.testclient import TestClient

from mjsim.service import create_app

OUT = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "test" / "fixtures"


def record(client, seed, rule, mode, pick):
    views = []
    r = client.post("/games", json={
        "rule": rule, "mode": mode, "seed": seed, "human_seats": [0],
        "agents": {"1": "heuristic", "2": "heuristic", "3": "heuristic"},
    })
    r.raise_for_status()
    view = r.json()
    views.append(view)
    guard = 0
    while not (view["terminated"] or view["truncated"]):
        action = pick(view["legal_actions"])
        r = client.post(f"/games/{view['game_id']}/actions",
                        json={"seat": 0, "action": action})
        r.raise_for_status()
        view = r.json()
        views.append(view)
        guard += 1
        assert guard < 1500
    return views


def main():
    app = create_app()
    views = []
    with TestClient(app) as client:
        views += record(client, 2024, "red", "single", lambda legal: legal[0])
        views += record(client, 7, "no-red", "single", lambda legal: legal[-1])
        views += record(client, 11, "red", "east", lambda legal: legal[0])
    OUT.mkdir(parents=True, exist_ok=True)
    # the SVG blobs dominate the file; keep a few, drop the rest
    for i, v in enumerate(views):
        if i % 7 != 0 and not v["terminated"]:
            v["svg"] = ""
    path = OUT / "views.json"
    path.write_text(json.dumps(views, sort_keys=True))
    print(f"wrote {len(views)} views to {path}", file=sys.stderr)


if __name__ == "__main__":
    main()
