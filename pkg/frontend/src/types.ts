// Shapes served by the session service. The console never builds game
// states itself; everything displayed comes from these views.

export type Phase = 'chair-to-decide' | 'universe-to-reveal' | 'terminal';

export type Role = 'good' | 'bad';

export interface ChairHistoryEntry {
  type: 'chair';
  candidate: string;
  action: string;
}

export interface UniverseHistoryEntry {
  type: 'universe';
  candidate: string;
  ranks: number[];
  mode: string;
  exact?: boolean;
}

export type HistoryEntry = ChairHistoryEntry | UniverseHistoryEntry;

export interface SessionView {
  id: string;
  variant: string;
  system: string;
  phase: Phase;
  candidates: string[];
  spoilers: string[] | null;
  presentation: string[];
  current: string | null;
  current_index: number;
  num_voters: number;
  budget: number;
  budget_remaining: number;
  sigma: string[];
  d: string;
  roles: Record<string, Role>;
  decisions: string[];
  votes: string[][];
  standing: string[];
  scores: Record<string, number>;
  masked_votes: string[][];
  history: HistoryEntry[];
  legal_actions?: string[];
  next_reveal?: string;
  winners?: string[];
  goal_satisfied?: boolean;
}

/** Forced-win flag per legal chair action, as served by /hint. */
export type HintMap = Record<string, boolean>;

export function isSessionView(value: unknown): value is SessionView {
  if (typeof value !== 'object' || value === null) return false;
  const v = value as Record<string, unknown>;
  return (
    typeof v.id === 'string' &&
    typeof v.variant === 'string' &&
    (v.phase === 'chair-to-decide' ||
      v.phase === 'universe-to-reveal' ||
      v.phase === 'terminal') &&
    Array.isArray(v.presentation) &&
    Array.isArray(v.standing) &&
    Array.isArray(v.votes) &&
    typeof v.roles === 'object' &&
    v.roles !== null &&
    typeof v.scores === 'object' &&
    v.scores !== null
  );
}
