// Wire types for the game service (see docs/api.md).

export interface Observation {
  hand_tokens: number[];
  event_tokens: [number, number, number][];
  shanten: number;
  scores: number[];
  round_wind: number;
  seat_wind: number;
  kyoku: number;
  honba: number;
  deposits: number;
  dora_indicator_tokens: number[];
  live_wall: number;
  riichi_flags: number[];
}

export interface ActionRow {
  id: number;
  kind: string;
  name: string;
  tile?: string;
  red?: boolean;
}

export interface Settlement {
  deltas: number[];
  honba: number;
  deposits: number;
}

export interface WinDetail {
  yaku: [number, number][];
  yakuman: number;
  han: number;
  fu: number;
  base: number;
  dora: number;
  ura: number;
  reds: number;
  form: string;
}

export interface KyokuResult {
  kyoku: number;
  honba: number;
  kind: string;
  winners: number[];
  loser: number;
  tenpai: number[];
  settlements: Settlement[];
  win_details: WinDetail[];
  scores_after: number[];
}

export interface FinalSummary {
  scores: number[];
  ranks: number[];
  rewards: number[];
}

export interface View {
  game_id: string;
  seat: number;
  current_player: number | null;
  terminated: boolean;
  truncated: boolean;
  waiting_on_you: boolean;
  observation: Observation;
  legal_actions: number[];
  legal_action_mask: boolean[];
  action_table: ActionRow[];
  svg: string;
  scores: number[];
  kyoku: number;
  honba: number;
  deposits: number;
  results: KyokuResult[];
  yaku_names: Record<string, string>;
  final?: FinalSummary;
}

export interface NewGameRequest {
  rule: string;
  mode: string;
  seed?: number;
  human_seats: number[];
  agents: Record<string, string>;
  locale: string;
}
