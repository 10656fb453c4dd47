// BoardModel: the SessionView plus everything derived for display.
// render_board is pure; a malformed view throws before any field is built,
// so callers show an error banner instead of a partial render.

import { HintMap, Phase, Role, SessionView, isSessionView } from './types';

export class BoardError extends Error {}

export type TimelineStatus = 'decided' | 'current' | 'future';

export interface TimelineSlot {
  candidate: string;
  status: TimelineStatus;
  role: Role;
  flag: string | null;
  inDZone: boolean;
  spoiler: boolean;
}

export interface ScoreBar {
  candidate: string;
  role: Role;
  score: number;
  fraction: number;
  coWinner: boolean;
}

export interface ActionBadge {
  action: string;
  hint: boolean | null;
}

export interface BoardModel {
  view: SessionView;
  phase: Phase;
  timeline: TimelineSlot[];
  scoreBars: ScoreBar[];
  maskedVotes: string[][];
  budgetUsed: number;
  budgetTotal: number;
  destructive: boolean;
  dZone: string[];
  actions: ActionBadge[];
  nextReveal: string | null;
  winners: string[] | null;
  goalSatisfied: boolean | null;
}

function topScore(view: SessionView): number {
  // With no voters every standing candidate co-wins with score zero.
  let top = 0;
  for (const c of view.standing) top = Math.max(top, view.scores[c] ?? 0);
  return top;
}

export function renderBoard(view: SessionView, hints: HintMap | null = null): BoardModel {
  if (!isSessionView(view)) {
    throw new BoardError('malformed session view');
  }
  const destructive = view.variant.startsWith('DC');
  const dZone = view.candidates.filter((c) => view.roles[c] === 'bad');
  const standing = new Set(view.standing);
  const top = topScore(view);

  const timeline: TimelineSlot[] = view.presentation.map((candidate, i) => {
    let status: TimelineStatus;
    if (i < view.decisions.length) status = 'decided';
    else if (view.phase !== 'terminal' && i === view.current_index) status = 'current';
    else status = 'future';
    return {
      candidate,
      status,
      role: view.roles[candidate],
      flag: i < view.decisions.length ? view.decisions[i] : null,
      inDZone: destructive && view.roles[candidate] === 'bad',
      spoiler: view.spoilers !== null && view.spoilers.includes(candidate),
    };
  });

  const scoreBars: ScoreBar[] = view.standing.map((candidate) => {
    const score = view.scores[candidate] ?? 0;
    return {
      candidate,
      role: view.roles[candidate],
      score,
      fraction: view.num_voters > 0 ? score / view.num_voters : 1,
      coWinner: standing.size > 0 && score === top,
    };
  });

  const actions: ActionBadge[] = (view.legal_actions ?? []).map((action) => ({
    action,
    hint: hints === null ? null : (hints[action] ?? null),
  }));

  return {
    view,
    phase: view.phase,
    timeline,
    scoreBars,
    maskedVotes: view.masked_votes.map((vote) => [...vote]),
    budgetUsed: view.budget - view.budget_remaining,
    budgetTotal: view.budget,
    destructive,
    dZone,
    actions,
    nextReveal: view.next_reveal ?? null,
    winners: view.winners ?? null,
    goalSatisfied: view.goal_satisfied ?? null,
  };
}
