// DOM rendering for the UiModel. Disabled controls render as inert
// elements (no click handler attached), so a stray click never sends a
// request.

import type { Control, UiModel } from "./model.js";

export interface Handlers {
  onAction: (action: number) => void;
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function controlNode(control: Control, handlers: Handlers): HTMLElement {
  const isTile = control.group === "tile" || control.group === "red";
  const node = el(
    "button",
    `control ${isTile ? "tile" : "button"} ${control.group}` +
      (control.enabled ? " enabled" : " disabled"),
    control.label,
  );
  node.setAttribute("data-action", String(control.action));
  if (control.enabled) {
    node.addEventListener("click", () => handlers.onAction(control.action));
  } else {
    (node as HTMLButtonElement).disabled = true;
  }
  return node;
}

export function render(root: HTMLElement, model: UiModel, handlers: Handlers): void {
  root.textContent = "";
  const { view } = model;

  const status = el("div", "status", model.statusLine);
  root.appendChild(status);

  const table = el("div", "table");
  table.innerHTML = view.svg;
  root.appendChild(table);

  const handRow = el("div", "hand-row");
  const buttonRow = el("div", "button-row");
  for (const control of model.controls) {
    const isTile = control.group === "tile" || control.group === "red";
    if (!isTile && !control.enabled) continue; // only meaningful buttons
    (isTile ? handRow : buttonRow).appendChild(controlNode(control, handlers));
  }
  root.appendChild(handRow);
  root.appendChild(buttonRow);

  const footer = el(
    "div",
    "footer",
    `kyoku ${view.kyoku + 1}  honba ${view.honba}  deposits ${view.deposits}  ` +
      `scores ${view.scores.join(" / ")}`,
  );
  root.appendChild(footer);

  if (model.settlement && (view.terminated || view.truncated || model.settlement.lines.length)) {
    root.appendChild(settlementNode(model));
  }
}

function settlementNode(model: UiModel): HTMLElement {
  const s = model.settlement!;
  const panel = el("div", "settlement");
  panel.appendChild(el("h3", "", "Last result"));
  for (const line of s.lines) {
    panel.appendChild(el("div", "line", line.text));
    panel.appendChild(
      el("div", "deltas", "deltas: " + line.deltas.map((d) => (d >= 0 ? `+${d}` : `${d}`)).join(" / ")),
    );
  }
  if (s.final) {
    panel.appendChild(el("h3", "", "Final standings"));
    s.final.ranks.forEach((rank, seat) => {
      panel.appendChild(
        el("div", "line", `seat ${seat}: rank ${rank + 1}, ${s.final!.scores[seat]} points`),
      );
    });
  }
  return panel;
}
