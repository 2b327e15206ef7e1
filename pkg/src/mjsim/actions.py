"""Fixed 115-id action encoding shared by the engine, env, and service.

  0..33   discard by kind (a non-red copy)
  34..36  discard the red 5m / 5p / 5s
  37      declare riichi (a restricted discard follows)
  38      tsumo          39  ron
  40      pon            41..43  chi (called tile is low / middle / high)
  44      open kan (on the claimed discard)
  45..78  closed kan by kind
  79..112 added kan by kind
  113     pass
  114     nine-terminals abort (red rules, first uninterrupted turn)
"""

from __future__ import annotations

from .tiles import RED_FIVE_KINDS, kind_name

DISCARD_RED_BASE = 34
RIICHI = 37
TSUMO = 38
RON = 39
PON = 40
CHI_LOW = 41
CHI_MID = 42
CHI_HIGH = 43
KAN_OPEN = 44
KAN_CLOSED_BASE = 45
KAN_ADDED_BASE = 79
PASS = 113
ABORT_NINE_TERMINALS = 114
NUM_ACTIONS = 115

RED_ACTION_BY_KIND = {k: DISCARD_RED_BASE + i for i, k in enumerate(RED_FIVE_KINDS)}


def discard_kind(action: int) -> int:
    """Kind discarded by a discard action, red ids included."""
    if action < 34:
        return action
    return RED_FIVE_KINDS[action - DISCARD_RED_BASE]


def is_discard(action: int) -> bool:
    return 0 <= action <= 36


def action_name(action: int) -> str:
    if action < 34:
        return f"discard {kind_name(action)}"
    if action < 37:
        return f"discard red {kind_name(RED_FIVE_KINDS[action - 34])}"
    if action == RIICHI:
        return "riichi"
    if action == TSUMO:
        return "tsumo"
    if action == RON:
        return "ron"
    if action == PON:
        return "pon"
    if action in (CHI_LOW, CHI_MID, CHI_HIGH):
        return ("chi low", "chi mid", "chi high")[action - CHI_LOW]
    if action == KAN_OPEN:
        return "open kan"
    if action < KAN_ADDED_BASE:
        return f"closed kan {kind_name(action - KAN_CLOSED_BASE)}"
    if action < PASS:
        return f"added kan {kind_name(action - KAN_ADDED_BASE)}"
    if action == PASS:
        return "pass"
    if action == ABORT_NINE_TERMINALS:
        return "nine terminals"
    raise ValueError(f"bad action id {action}")


def action_table() -> list[dict]:
    """Machine-readable table of every action id."""
    rows = []
    for a in range(NUM_ACTIONS):
        if a <= 36:
            kind = discard_kind(a)
            rows.append({"id": a, "kind": "discard", "tile": kind_name(kind),
                         "red": a >= 34, "name": action_name(a)})
        elif KAN_CLOSED_BASE <= a < KAN_ADDED_BASE:
            rows.append({"id": a, "kind": "kan_closed",
                         "tile": kind_name(a - KAN_CLOSED_BASE), "name": action_name(a)})
        elif KAN_ADDED_BASE <= a < PASS:
            rows.append({"id": a, "kind": "kan_added",
                         "tile": kind_name(a - KAN_ADDED_BASE), "name": action_name(a)})
        else:
            kind = {RIICHI: "riichi", TSUMO: "tsumo", RON: "ron", PON: "pon",
                    CHI_LOW: "chi", CHI_MID: "chi", CHI_HIGH: "chi",
                    KAN_OPEN: "kan_open", PASS: "pass",
                    ABORT_NINE_TERMINALS: "abort"}[a]
            rows.append({"id": a, "kind": kind, "name": action_name(a)})
    return rows
