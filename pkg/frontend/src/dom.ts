// DOM painting: BoardModel in, innerHTML out. All state lives server-side
// and in ChairConsole; this file only draws.

import { BoardModel } from './board';
import { ConsoleState } from './console';

function esc(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;');
}

function timelineHtml(board: BoardModel): string {
  const slots = board.timeline
    .map((slot) => {
      const classes = [
        'slot',
        slot.status,
        slot.role,
        slot.inDZone ? 'd-zone' : '',
        slot.spoiler ? 'spoiler' : '',
      ]
        .filter(Boolean)
        .join(' ');
      const flag = slot.flag === null ? '' : ` <em>${esc(slot.flag)}</em>`;
      return `<li class="${classes}">${esc(slot.candidate)}${flag}</li>`;
    })
    .join('');
  return `<ol class="timeline">${slots}</ol>`;
}

function scoresHtml(board: BoardModel): string {
  const rows = board.scoreBars
    .map((bar) => {
      const width = Math.round(bar.fraction * 100);
      const co = bar.coWinner ? ' co-winner' : '';
      return (
        `<div class="score-row${co}"><span class="name ${bar.role}">` +
        `${esc(bar.candidate)}</span>` +
        `<span class="bar" style="width:${width}%"></span>` +
        `<span class="value">${bar.score}</span></div>`
      );
    })
    .join('');
  return `<div class="scores">${rows}</div>`;
}

function votesHtml(board: BoardModel): string {
  const rows = board.maskedVotes
    .map((vote, i) => `<tr><th>voter ${i + 1}</th><td>${esc(vote.join(' > '))}</td></tr>`)
    .join('');
  return `<table class="votes">${rows}</table>`;
}

function actionsHtml(board: BoardModel): string {
  return board.actions
    .map((badge) => {
      const hint =
        badge.hint === null ? '' : badge.hint ? ' winning' : ' losing';
      return (
        `<button class="action${hint}" data-action="${esc(badge.action)}">` +
        `${esc(badge.action)}</button>`
      );
    })
    .join('');
}

export function paint(root: HTMLElement, state: ConsoleState): void {
  const parts: string[] = [];
  if (state.errorBanner !== null) {
    parts.push(`<div class="banner error">${esc(state.errorBanner)}</div>`);
  }
  if (state.hintNotice !== null) {
    parts.push(`<div class="banner notice">${esc(state.hintNotice)}</div>`);
  }
  const board = state.board;
  if (board === null) {
    parts.push('<p class="empty">No session. Load an instance document.</p>');
    root.innerHTML = parts.join('\n');
    return;
  }
  parts.push(
    `<header><h1>${esc(board.view.variant)} / ${esc(board.view.system)}</h1>` +
      `<p>budget ${board.budgetUsed}/${board.budgetTotal}, phase ${esc(board.phase)}</p></header>`,
  );
  parts.push(timelineHtml(board));
  parts.push(scoresHtml(board));
  parts.push(votesHtml(board));
  if (board.phase === 'chair-to-decide') {
    parts.push(`<div class="actions">${actionsHtml(board)}</div>`);
  }
  if (board.phase === 'terminal') {
    const verdict = board.goalSatisfied ? 'goal satisfied' : 'goal failed';
    parts.push(
      `<div class="terminal ${board.goalSatisfied ? 'won' : 'lost'}">` +
        `winners: ${esc((board.winners ?? []).join(', ') || 'nobody')} — ${verdict}</div>`,
    );
  }
  root.innerHTML = parts.join('\n');
}
