// DOM wiring for the trial runner. Screens: load -> start -> trial -> done.
// The app object is returned from initApp so tests can drive it directly.

import bundleSchema from './schema/trial_bundle.schema.json';
import { buildResultsJson, downloadResults, type DisplayInfo } from './export';
import { Session, type TrialBundle } from './session';
import { validate, type Schema } from './validate';

const DISPLAY: DisplayInfo = { font_family: 'monospace', font_size_px: 20 };

type ScreenName = 'load' | 'error' | 'start' | 'trial' | 'finished';

export interface App {
  loadBundleFromText(text: string): boolean;
  beginSession(readerId: string): void;
  session: () => Session | null;
  exportJson(): string;
}

function el<T extends HTMLElement>(root: Document, id: string): T {
  const node = root.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

export function initApp(root: Document = document): App {
  const screens: Record<ScreenName, HTMLElement> = {
    load: el(root, 'screen-load'),
    error: el(root, 'screen-error'),
    start: el(root, 'screen-start'),
    trial: el(root, 'screen-trial'),
    finished: el(root, 'screen-finished'),
  };
  const fileInput = el<HTMLInputElement>(root, 'bundle-file');
  const errorField = el(root, 'error-field');
  const errorMessage = el(root, 'error-message');
  const conditionList = el(root, 'condition-list');
  const readerInput = el<HTMLInputElement>(root, 'reader-id');
  const beginButton = el<HTMLButtonElement>(root, 'begin-session');
  const progress = el(root, 'trial-progress');
  const trialText = el(root, 'trial-text');
  const revealButton = el<HTMLButtonElement>(root, 'reveal-btn');
  const doneButton = el<HTMLButtonElement>(root, 'done-btn');
  const discardNote = el(root, 'discard-note');
  const exportButton = el<HTMLButtonElement>(root, 'export-btn');

  let bundle: TrialBundle | null = null;
  let session: Session | null = null;

  function show(name: ScreenName): void {
    for (const [key, screen] of Object.entries(screens)) {
      screen.hidden = key !== name;
    }
  }

  function showError(path: string, message: string): void {
    errorField.textContent = path;
    errorMessage.textContent = message;
    show('error');
  }

  function renderTrial(): void {
    if (!session) return;
    const total = session.completed + session.remaining;
    progress.textContent = `Trial ${session.completed + 1} of ${total}`;
    trialText.textContent = '';
    trialText.hidden = true;
    revealButton.hidden = false;
    doneButton.hidden = true;
  }

  function advance(): void {
    if (!session) return;
    if (session.phase === 'finished') {
      exportButton.disabled = session.records.length === 0;
      show('finished');
    } else {
      renderTrial();
      show('trial');
    }
  }

  function loadBundleFromText(text: string): boolean {
    let doc: unknown;
    try {
      doc = JSON.parse(text);
    } catch (exc) {
      showError('(file)', `not valid JSON: ${exc}`);
      return false;
    }
    const result = validate(doc, bundleSchema as Schema);
    if (!result.ok) {
      showError(result.path, result.message);
      return false;
    }
    bundle = doc as TrialBundle;
    conditionList.textContent = '';
    for (const condition of bundle.conditions) {
      const item = root.createElement('li');
      item.textContent = `${condition.name} (${condition.texts.length} text${
        condition.texts.length === 1 ? '' : 's'
      })`;
      conditionList.appendChild(item);
    }
    show('start');
    return true;
  }

  function beginSession(readerId: string): void {
    if (!bundle) throw new Error('no bundle loaded');
    if (!readerId.trim()) {
      readerInput.focus();
      return;
    }
    session = new Session(bundle, readerId.trim());
    advance();
  }

  fileInput.addEventListener('change', () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    file.text().then(loadBundleFromText);
  });

  beginButton.addEventListener('click', () => beginSession(readerInput.value));

  function revealCurrent(): void {
    if (!session || session.phase !== 'idle') return;
    const item = session.reveal();
    trialText.textContent = item.text;
    trialText.hidden = false;
    revealButton.hidden = true;
    doneButton.hidden = false;
    discardNote.hidden = true;
  }

  function finishCurrent(): void {
    if (!session || session.phase !== 'reading') return;
    session.finish();
    advance();
  }

  revealButton.addEventListener('click', revealCurrent);
  doneButton.addEventListener('click', finishCurrent);

  // self-paced reading is keypress-driven too: space/enter reveals, then ends
  root.addEventListener('keydown', (event) => {
    if (event.key !== ' ' && event.key !== 'Enter') return;
    if (screens.trial.hidden || !session) return;
    event.preventDefault();
    if (session.phase === 'idle') {
      revealCurrent();
    } else if (session.phase === 'reading') {
      finishCurrent();
    }
  });

  // A hidden tab invalidates the timing: discard and re-queue.
  root.addEventListener('visibilitychange', () => {
    if (root.visibilityState === 'hidden' && session?.phase === 'reading') {
      session.discard();
      discardNote.hidden = false;
      renderTrial();
    }
  });

  exportButton.addEventListener('click', () => {
    if (session && session.records.length > 0) {
      downloadResults(session, DISPLAY);
    }
  });

  show('load');

  return {
    loadBundleFromText,
    beginSession,
    session: () => session,
    exportJson: () => {
      if (!session) throw new Error('no session');
      return buildResultsJson(session, DISPLAY);
    },
  };
}

// Browser entry point; tests import initApp instead.
if (typeof window !== 'undefined' && !('__vitest_worker__' in globalThis)) {
  initApp(document);
}
