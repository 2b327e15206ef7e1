// Pure view-model logic: which controls exist, which are enabled, and
// what the settlement panel shows. Keeping this free of DOM and fetch
// calls lets the tests drive it straight from recorded view fixtures.

import type { Control, UiModel } from "./model.js";
import type { View, WinDetail } from "./types.js";

const KIND_NAMES = (() => {
  const names: string[] = [];
  for (const suit of ["m", "p", "s"]) {
    for (let n = 1; n <= 9; n++) names.push(`${n}${suit}`);
  }
  names.push("E", "S", "W", "N", "P", "F", "C");
  return names;
})();

export function tokenLabel(token: number): string {
  if (token < 34) return KIND_NAMES[token];
  if (token < 37) return "0" + "mps"[token - 34];
  return "?";
}

/** Action id that discards the tile shown by a hand token. */
export function discardActionForToken(token: number): number {
  return token < 34 ? token : 34 + (token - 34);
}

const BUTTON_ACTIONS: [number, string, Control["group"]][] = [
  [37, "Riichi", "riichi"],
  [38, "Tsumo", "win"],
  [39, "Ron", "win"],
  [40, "Pon", "call"],
  [41, "Chi (low)", "call"],
  [42, "Chi (mid)", "call"],
  [43, "Chi (high)", "call"],
  [44, "Open kan", "call"],
  [113, "Pass", "pass"],
  [114, "Nine terminals", "abort"],
];

/**
 * Every control rendered for a view, one per hand tile plus the fixed
 * buttons plus any legal kan-by-kind ids. A control is enabled exactly
 * when its action's mask bit is true.
 */
export function controlsFor(view: View): Control[] {
  const mask = view.legal_action_mask;
  const controls: Control[] = [];
  view.observation.hand_tokens.forEach((token, slot) => {
    if (token === 37) return;
    const action = discardActionForToken(token);
    controls.push({
      action,
      label: tokenLabel(token),
      group: token >= 34 ? "red" : "tile",
      enabled: Boolean(mask[action]),
      slot,
    });
  });
  for (const [action, label, group] of BUTTON_ACTIONS) {
    controls.push({ action, label, group, enabled: Boolean(mask[action]) });
  }
  // closed/added kans surface only when legal; label them with the kind
  for (let action = 45; action < 113; action++) {
    if (!mask[action]) continue;
    const kind = action < 79 ? action - 45 : action - 79;
    const label = (action < 79 ? "Closed kan " : "Added kan ") + KIND_NAMES[kind];
    controls.push({ action, label, group: "call", enabled: true });
  }
  return controls;
}

export function enabledActions(controls: Control[]): number[] {
  return [...new Set(controls.filter((c) => c.enabled).map((c) => c.action))].sort(
    (a, b) => a - b,
  );
}

export function describeWin(detail: WinDetail, yakuNames: Record<string, string>): string {
  const names = detail.yaku.map(([id]) => yakuNames[String(id)] ?? `yaku ${id}`);
  const bonus: string[] = [];
  if (detail.dora) bonus.push(`dora ${detail.dora}`);
  if (detail.ura) bonus.push(`ura ${detail.ura}`);
  if (detail.reds) bonus.push(`red ${detail.reds}`);
  const parts = names.concat(bonus).join(", ");
  if (detail.yakuman > 0) {
    const mult = detail.yakuman > 1 ? `${detail.yakuman}x ` : "";
    return `${mult}yakuman (${parts})`;
  }
  return `${detail.han} han ${detail.fu} fu (${parts})`;
}

export interface SettlementLine {
  text: string;
  deltas: number[];
}

export function settlementPanel(view: View): UiModel["settlement"] {
  if (!view.results.length) return null;
  const last = view.results[view.results.length - 1];
  const lines: SettlementLine[] = [];
  if (last.kind === "tsumo" || last.kind === "ron") {
    last.winners.forEach((seat, i) => {
      const detail = last.win_details[i];
      lines.push({
        text: `Seat ${seat} wins by ${last.kind}: ${describeWin(detail, view.yaku_names)}`,
        deltas: last.settlements[i].deltas,
      });
    });
  } else if (last.kind === "exhaustive") {
    lines.push({
      text: last.tenpai.length
        ? `Exhaustive draw, tenpai: ${last.tenpai.map((s) => `seat ${s}`).join(", ")}`
        : "Exhaustive draw, nobody tenpai",
      deltas: last.settlements.length ? last.settlements[0].deltas : [0, 0, 0, 0],
    });
  } else {
    lines.push({ text: `Aborted: ${last.kind.replace("abort_", "").replace(/_/g, " ")}`,
                 deltas: [0, 0, 0, 0] });
  }
  const total = lines.reduce(
    (acc, l) => acc.map((v, i) => v + l.deltas[i]),
    [0, 0, 0, 0],
  );
  return {
    kind: last.kind,
    lines,
    totalDeltas: total,
    scoresAfter: last.scores_after,
    final: view.final ?? null,
  };
}

/** Conservation identity surfaced in the UI footer (and asserted in tests). */
export function scoreConservation(view: View): number {
  return view.scores.reduce((a, b) => a + b, 0) + 1000 * view.deposits;
}

export function buildModel(view: View): UiModel {
  return {
    view,
    controls: controlsFor(view),
    settlement: settlementPanel(view),
    statusLine: statusLine(view),
  };
}

export function statusLine(view: View): string {
  if (view.terminated || view.truncated) {
    const final = view.final;
    if (final) {
      const rank = final.ranks[view.seat] + 1;
      return `Game over. You finished rank ${rank} with ${final.scores[view.seat]} points.`;
    }
    return "Game over.";
  }
  if (view.waiting_on_you) {
    return view.legal_actions.some((a) => a === 39 || a === 40 || a === 113)
      ? "Your call: take the claim or pass."
      : "Your turn: choose a tile or an action.";
  }
  return `Waiting on seat ${view.current_player}.`;
}
