// ChairConsole drives one session: chair decisions go to the service, the
// universe answers (adversarially by default, or with manually entered
// insertion ranks), and the board re-renders from the fresh view each time.

import { ApiError, SessionApi } from './api';
import { BoardModel, renderBoard } from './board';
import { HintMap, SessionView } from './types';

export type UniverseMode = 'adversarial' | 'manual';

export interface ConsoleState {
  board: BoardModel | null;
  hints: HintMap | null;
  errorBanner: string | null;
  hintNotice: string | null;
}

export class ChairConsole {
  readonly state: ConsoleState = {
    board: null,
    hints: null,
    errorBanner: null,
    hintNotice: null,
  };
  universeMode: UniverseMode = 'adversarial';
  pendingRanks: number[] = [];

  constructor(private readonly api: SessionApi) {}

  private show(view: SessionView): BoardModel {
    const board = renderBoard(view, this.state.hints);
    this.state.board = board;
    this.state.errorBanner = null;
    return board;
  }

  async start(document: unknown): Promise<BoardModel> {
    this.state.hints = null;
    return this.show(await this.api.createSession(document));
  }

  async refresh(): Promise<BoardModel> {
    return this.show(await this.api.getView());
  }

  /** Post a chair decision; if it is the universe's turn afterwards, ask
   * for its reply (worst case by default), then re-render. A 409 surfaces
   * the violated rule verbatim and leaves the board unchanged. */
  async submitAction(action: string): Promise<BoardModel> {
    const board = this.state.board;
    if (board !== null && board.phase === 'terminal') {
      return board; // nothing to submit after the election is over
    }
    let view: SessionView;
    try {
      view = await this.api.chairAction(action);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        this.state.errorBanner = error.detail;
        if (this.state.board !== null) return this.state.board;
      }
      throw error;
    }
    this.state.hints = null;
    if (view.phase === 'universe-to-reveal') {
      view = await this.api.universeMove(
        this.universeMode === 'adversarial'
          ? { mode: 'adversarial' }
          : { ranks: this.pendingRanks },
      );
    }
    return this.show(view);
  }

  /** Fetch forced-win flags per legal action; a 503 becomes a notice that
   * the position is too large for an exact hint. */
  async fetchHint(): Promise<HintMap | null> {
    try {
      this.state.hints = await this.api.hint();
      this.state.hintNotice = null;
    } catch (error) {
      if (error instanceof ApiError && error.status === 503) {
        this.state.hints = null;
        this.state.hintNotice = 'position too large for exact hint';
        return null;
      }
      throw error;
    }
    if (this.state.board !== null) {
      this.state.board = renderBoard(this.state.board.view, this.state.hints);
    }
    return this.state.hints;
  }

  /** Play the whole game by always following a winning hint; returns the
   * terminal board. Fails if no hinted-winning action exists. */
  async followHints(): Promise<BoardModel> {
    let board = this.state.board;
    if (board === null) throw new Error('no active session');
    while (board.phase !== 'terminal') {
      const hints = await this.fetchHint();
      if (hints === null) throw new Error('hints unavailable');
      const winning = Object.entries(hints).find(([, ok]) => ok);
      if (winning === undefined) {
        throw new Error('no winning action from this position');
      }
      board = await this.submitAction(winning[0]);
    }
    return board;
  }
}
