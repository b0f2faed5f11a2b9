// Trial session state machine. A text is hidden until the reader reveals
// it; the timer runs from reveal to "done" on a monotonic clock. A trial,
// once revealed, either completes or is discarded (and re-queued at the
// end with a fresh reveal); it is never paused or re-timed.

import { seededShuffle } from './shuffle';

export interface TrialCondition {
  name: string;
  generator: string;
  spec?: Record<string, unknown>;
  texts: string[];
}

export interface TrialBundle {
  schema_version: number;
  bundle_id: string;
  presentation: 'fixed' | 'shuffled-per-reader';
  conditions: TrialCondition[];
  created_from: Record<string, unknown>;
}

export interface TrialRecord {
  bundle_id: string;
  reader_id: string;
  condition: string;
  text_index: number;
  elapsed_ms: number;
  recorded_at: string;
  comprehension: string | null;
}

export interface QueueItem {
  condition: string;
  textIndex: number;
  text: string;
}

export type Clock = () => number;
export type Phase = 'idle' | 'reading' | 'finished';

export function buildQueue(bundle: TrialBundle, readerId: string): QueueItem[] {
  const items: QueueItem[] = [];
  for (const condition of bundle.conditions) {
    condition.texts.forEach((text, textIndex) => {
      items.push({ condition: condition.name, textIndex, text });
    });
  }
  if (bundle.presentation === 'shuffled-per-reader') {
    return seededShuffle(items, readerId);
  }
  return items;
}

const defaultClock: Clock = () =>
  typeof performance === 'object' ? performance.now() : Date.now();

export class Session {
  readonly bundle: TrialBundle;
  readonly readerId: string;
  readonly records: TrialRecord[] = [];
  private readonly clock: Clock;
  private queue: QueueItem[];
  private revealedAt: number | null = null;

  constructor(bundle: TrialBundle, readerId: string, clock: Clock = defaultClock) {
    if (!readerId) throw new Error('reader id must not be empty');
    this.bundle = bundle;
    this.readerId = readerId;
    this.clock = clock;
    this.queue = buildQueue(bundle, readerId);
  }

  get phase(): Phase {
    if (this.revealedAt !== null) return 'reading';
    return this.queue.length === 0 ? 'finished' : 'idle';
  }

  get current(): QueueItem | null {
    return this.queue.length ? this.queue[0] : null;
  }

  get remaining(): number {
    return this.queue.length;
  }

  get completed(): number {
    return this.records.length;
  }

  reveal(): QueueItem {
    if (this.phase !== 'idle') {
      throw new Error(`cannot reveal while ${this.phase}`);
    }
    this.revealedAt = this.clock();
    return this.queue[0];
  }

  finish(): TrialRecord {
    if (this.revealedAt === null) {
      throw new Error('no revealed trial to finish');
    }
    const elapsed = Math.max(1, Math.round(this.clock() - this.revealedAt));
    const item = this.queue.shift()!;
    this.revealedAt = null;
    const record: TrialRecord = {
      bundle_id: this.bundle.bundle_id,
      reader_id: this.readerId,
      condition: item.condition,
      text_index: item.textIndex,
      elapsed_ms: elapsed,
      recorded_at: new Date().toISOString(),
      comprehension: null,
    };
    this.records.push(record);
    return record;
  }

  // Visibility loss mid-trial: drop the timing, move the trial to the back
  // of the queue for a fresh reveal. No record is written.
  discard(): QueueItem {
    if (this.revealedAt === null) {
      throw new Error('no revealed trial to discard');
    }
    this.revealedAt = null;
    const item = this.queue.shift()!;
    this.queue.push(item);
    return item;
  }
}
