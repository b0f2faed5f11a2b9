// Minimal JSON Schema interpreter covering the subset our schemas use
// (type, const, enum, required, properties, items, minItems, minLength,
// minimum). Driven directly by the vendored .schema.json files so the
// frontend and the CLI validate against the same single source of truth.
// On failure it reports the path of the offending field.

export interface Schema {
  type?: string | string[];
  const?: unknown;
  enum?: unknown[];
  required?: string[];
  properties?: Record<string, Schema>;
  items?: Schema;
  minItems?: number;
  minLength?: number;
  minimum?: number;
  [key: string]: unknown;
}

export type ValidationResult =
  | { ok: true }
  | { ok: false; path: string; message: string };

function fail(path: string, message: string): ValidationResult {
  return { ok: false, path: path || '(root)', message };
}

function typeOf(value: unknown): string {
  if (value === null) return 'null';
  if (Array.isArray(value)) return 'array';
  return typeof value;
}

function matchesType(value: unknown, expected: string): boolean {
  switch (expected) {
    case 'integer':
      return typeof value === 'number' && Number.isInteger(value);
    case 'number':
      return typeof value === 'number';
    case 'object':
      return typeOf(value) === 'object';
    case 'array':
      return Array.isArray(value);
    default:
      return typeOf(value) === expected;
  }
}

export function validate(value: unknown, schema: Schema, path = ''): ValidationResult {
  if (schema.type !== undefined) {
    const expected = Array.isArray(schema.type) ? schema.type : [schema.type];
    if (!expected.some((t) => matchesType(value, t))) {
      return fail(path, `expected ${expected.join(' or ')}, got ${typeOf(value)}`);
    }
  }
  if (schema.const !== undefined && value !== schema.const) {
    return fail(path, `expected constant ${JSON.stringify(schema.const)}, got ${JSON.stringify(value)}`);
  }
  if (schema.enum !== undefined && !schema.enum.includes(value)) {
    return fail(path, `value ${JSON.stringify(value)} not one of ${JSON.stringify(schema.enum)}`);
  }
  if (typeof value === 'string' && schema.minLength !== undefined && value.length < schema.minLength) {
    return fail(path, `shorter than minLength ${schema.minLength}`);
  }
  if (typeof value === 'number' && schema.minimum !== undefined && value < schema.minimum) {
    return fail(path, `below minimum ${schema.minimum}`);
  }
  if (Array.isArray(value)) {
    if (schema.minItems !== undefined && value.length < schema.minItems) {
      return fail(path, `fewer than minItems ${schema.minItems}`);
    }
    if (schema.items) {
      for (let i = 0; i < value.length; i++) {
        const result = validate(value[i], schema.items, `${path}[${i}]`);
        if (!result.ok) return result;
      }
    }
  }
  if (typeOf(value) === 'object') {
    const obj = value as Record<string, unknown>;
    for (const key of schema.required ?? []) {
      if (!(key in obj)) {
        return fail(path ? `${path}.${key}` : key, 'missing required field');
      }
    }
    if (schema.properties) {
      for (const [key, sub] of Object.entries(schema.properties)) {
        if (key in obj) {
          const result = validate(obj[key], sub, path ? `${path}.${key}` : key);
          if (!result.ok) return result;
        }
      }
    }
  }
  return { ok: true };
}
