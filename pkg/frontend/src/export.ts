// Results serialization: the file handed back to `jumblekit trial ingest`.

import type { Session } from './session';
import recordsSchema from './schema/trial_records.schema.json';
import { validate, type Schema } from './validate';

export interface DisplayInfo {
  font_family: string;
  font_size_px: number;
}

export function buildResults(session: Session, display: DisplayInfo): object {
  return {
    schema_version: 1,
    bundle_id: session.bundle.bundle_id,
    reader_id: session.readerId,
    display,
    records: session.records,
  };
}

export function buildResultsJson(session: Session, display: DisplayInfo): string {
  const doc = buildResults(session, display);
  // belt and braces: never export a file the CLI would reject
  const result = validate(doc, recordsSchema as Schema);
  if (!result.ok) {
    throw new Error(`export failed validation at ${result.path}: ${result.message}`);
  }
  return JSON.stringify(doc, null, 2) + '\n';
}

export function downloadResults(session: Session, display: DisplayInfo): void {
  const json = buildResultsJson(session, display);
  const blob = new Blob([json], { type: 'application/json' });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement('a');
  anchor.href = url;
  anchor.download = `results_${session.readerId}_${session.bundle.bundle_id}.json`;
  anchor.style.display = 'none';
  document.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}
