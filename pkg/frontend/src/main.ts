// Browser bootstrap: wire the console to the page.

import { SessionApi } from './api';
import { ChairConsole } from './console';
import { paint } from './dom';

const root = document.getElementById('board');
const form = document.getElementById('loader') as HTMLFormElement | null;
const docBox = document.getElementById('document') as HTMLTextAreaElement | null;
const hintButton = document.getElementById('hint') as HTMLButtonElement | null;
const modeToggle = document.getElementById('manual-universe') as HTMLInputElement | null;
const ranksBox = document.getElementById('ranks') as HTMLInputElement | null;

if (root === null || form === null || docBox === null) {
  throw new Error('console markup missing');
}

const api = new SessionApi(window.location.origin);
const chair = new ChairConsole(api);

function repaint(): void {
  paint(root as HTMLElement, chair.state);
  root!.querySelectorAll<HTMLButtonElement>('button.action').forEach((button) => {
    button.addEventListener('click', () => {
      void act(button.dataset.action ?? '');
    });
  });
}

async function act(action: string): Promise<void> {
  if (modeToggle?.checked && ranksBox !== null) {
    chair.universeMode = 'manual';
    chair.pendingRanks = ranksBox.value
      .split(',')
      .map((x) => parseInt(x.trim(), 10))
      .filter((x) => !Number.isNaN(x));
  } else {
    chair.universeMode = 'adversarial';
  }
  try {
    await chair.submitAction(action);
  } catch (error) {
    chair.state.errorBanner = String(error);
  }
  repaint();
}

form.addEventListener('submit', (event) => {
  event.preventDefault();
  void (async () => {
    try {
      await chair.start(JSON.parse(docBox.value));
    } catch (error) {
      chair.state.errorBanner = String(error);
    }
    repaint();
  })();
});

hintButton?.addEventListener('click', () => {
  void (async () => {
    try {
      await chair.fetchHint();
    } catch (error) {
      chair.state.errorBanner = String(error);
    }
    repaint();
  })();
});

repaint();
