// Entry point: new-game form plus the single-session game loop. One
// action request is in flight at a time; the response already includes
// all agent turns, so no polling is needed.

import { ApiError, Client } from "./api.js";
import { buildModel } from "./controller.js";
import { render } from "./dom.js";
import type { View } from "./types.js";

const client = new Client("");
let current: View | null = null;
let busy = false;

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function locale(): string {
  return (document.getElementById("locale") as HTMLSelectElement).value;
}

function showError(message: string): void {
  $("error").textContent = message;
}

async function refresh(): Promise<void> {
  if (!current) return;
  try {
    current = await client.getView(current.game_id, current.seat, locale());
    draw();
  } catch (err) {
    showError(err instanceof ApiError ? JSON.stringify(err.detail) : String(err));
  }
}

function draw(): void {
  if (!current) return;
  showError("");
  render($("game"), buildModel(current), {
    onAction: (action) => void submit(action),
  });
}

async function submit(action: number): Promise<void> {
  if (!current || busy) return;
  busy = true;
  try {
    current = await client.postAction(current.game_id, current.seat, action, locale());
    draw();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      await refresh(); // stale view: re-pull and carry on
    } else {
      showError(err instanceof ApiError ? JSON.stringify(err.detail) : String(err));
    }
  } finally {
    busy = false;
  }
}

async function newGame(): Promise<void> {
  const rule = (document.getElementById("rule") as HTMLSelectElement).value;
  const mode = (document.getElementById("mode") as HTMLSelectElement).value;
  const seedText = (document.getElementById("seed") as HTMLInputElement).value.trim();
  const agents = (document.getElementById("agents") as HTMLSelectElement).value;
  try {
    current = await client.newGame({
      rule,
      mode,
      seed: seedText ? Number(seedText) : undefined,
      human_seats: [0],
      agents: { "1": agents, "2": agents, "3": agents },
      locale: locale(),
    });
    draw();
  } catch (err) {
    showError(err instanceof ApiError ? JSON.stringify(err.detail) : String(err));
  }
}

$("new-game").addEventListener("click", () => void newGame());
$("refresh").addEventListener("click", () => void refresh());
