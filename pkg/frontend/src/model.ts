import type { FinalSummary, View } from "./types.js";
import type { SettlementLine } from "./controller.js";

export interface Control {
  action: number;
  label: string;
  group: "tile" | "red" | "call" | "win" | "riichi" | "pass" | "abort";
  enabled: boolean;
  slot?: number; // hand position for tile controls
}

export interface UiModel {
  view: View;
  controls: Control[];
  settlement: {
    kind: string;
    lines: SettlementLine[];
    totalDeltas: number[];
    scoresAfter: number[];
    final: FinalSummary | null;
  } | null;
  statusLine: string;
}
