import { describe, expect, it } from 'vitest';

import { BoardError, renderBoard } from '../src/board';
import { SessionView } from '../src/types';

function makeView(overrides: Partial<SessionView> = {}): SessionView {
  return {
    id: 's1',
    variant: 'CCDC',
    system: 'plurality',
    phase: 'chair-to-decide',
    candidates: ['x', 'g1'],
    spoilers: null,
    presentation: ['x', 'g1'],
    current: 'x',
    current_index: 0,
    num_voters: 1,
    budget: 1,
    budget_remaining: 1,
    sigma: ['g1', 'x'],
    d: 'g1',
    roles: { x: 'bad', g1: 'good' },
    decisions: [],
    votes: [['x']],
    standing: [],
    scores: {},
    masked_votes: [[]],
    history: [],
    legal_actions: ['keep', 'delete'],
    ...overrides,
  };
}

describe('renderBoard', () => {
  it('splits the timeline into decided, current and future segments', () => {
    const board = renderBoard(
      makeView({
        candidates: ['a', 'b', 'c'],
        presentation: ['a', 'b', 'c'],
        sigma: ['c', 'a', 'b'],
        d: 'c',
        roles: { a: 'bad', b: 'bad', c: 'good' },
        decisions: ['kept'],
        current: 'b',
        current_index: 1,
        votes: [['a', 'b']],
        standing: ['a'],
        scores: { a: 1 },
        masked_votes: [['a']],
      }),
    );
    expect(board.timeline.map((s) => s.status)).toEqual([
      'decided',
      'current',
      'future',
    ]);
    expect(board.timeline[0].flag).toBe('kept');
    expect(board.timeline[2].flag).toBeNull();
  });

  it('renders every standing candidate as co-winner with zero voters', () => {
    const board = renderBoard(
      makeView({
        num_voters: 0,
        votes: [],
        masked_votes: [],
        standing: ['x', 'g1'],
        scores: { x: 0, g1: 0 },
        decisions: ['kept'],
        current: 'g1',
        current_index: 1,
      }),
    );
    expect(board.scoreBars).toHaveLength(2);
    expect(board.scoreBars.every((bar) => bar.coWinner)).toBe(true);
  });

  it('marks the d-or-worse zone only for destructive variants', () => {
    const destructive = renderBoard(
      makeView({ variant: 'DCDC-NHT', roles: { x: 'bad', g1: 'good' } }),
    );
    expect(destructive.destructive).toBe(true);
    expect(destructive.dZone).toEqual(['x']);
    expect(destructive.timeline[0].inDZone).toBe(true);
    expect(destructive.timeline[1].inDZone).toBe(false);

    const constructive = renderBoard(makeView());
    expect(constructive.destructive).toBe(false);
    expect(constructive.timeline[0].inDZone).toBe(false);
  });

  it('badges actions with hints when provided', () => {
    const board = renderBoard(makeView(), { keep: false, delete: true });
    expect(board.actions).toEqual([
      { action: 'keep', hint: false },
      { action: 'delete', hint: true },
    ]);
    const unhinted = renderBoard(makeView());
    expect(unhinted.actions.every((a) => a.hint === null)).toBe(true);
  });

  it('renders terminal state with winners and goal verdict', () => {
    const board = renderBoard(
      makeView({
        phase: 'terminal',
        current: null,
        decisions: ['deleted', 'kept'],
        current_index: 1,
        votes: [['g1', 'x']],
        standing: ['g1'],
        scores: { g1: 1 },
        masked_votes: [['g1']],
        winners: ['g1'],
        goal_satisfied: true,
        legal_actions: undefined,
      }),
    );
    expect(board.phase).toBe('terminal');
    expect(board.winners).toEqual(['g1']);
    expect(board.goalSatisfied).toBe(true);
    expect(board.actions).toEqual([]);
    expect(board.timeline.every((s) => s.status !== 'current')).toBe(true);
  });

  it('rejects malformed views outright', () => {
    expect(() => renderBoard({ nonsense: 1 } as unknown as SessionView)).toThrow(
      BoardError,
    );
  });

  it('reports budget consumption', () => {
    const board = renderBoard(
      makeView({ budget: 2, budget_remaining: 1, decisions: [] }),
    );
    expect(board.budgetUsed).toBe(1);
    expect(board.budgetTotal).toBe(2);
  });

  it('marks spoilers on the timeline for addition variants', () => {
    const board = renderBoard(
      makeView({
        variant: 'CCAC',
        spoilers: ['x'],
        legal_actions: ['not-add', 'add'],
      }),
    );
    expect(board.timeline[0].spoiler).toBe(true);
    expect(board.timeline[1].spoiler).toBe(false);
  });
});
