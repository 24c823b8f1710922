/**
 * Extraction of raw value literals from JSON response text.
 *
 * The UI must display numbers exactly as the service printed them, and
 * JSON.parse + String() does not round-trip: the service prints 1e-05
 * where String(0.00001) gives "0.00001". So displayed values are sliced
 * straight out of the response body by path, byte for byte.
 */

export type JsonPath = ReadonlyArray<string | number>;

const WS = ' \t\n\r';

function isWs(ch: string): boolean {
  return WS.includes(ch);
}

function skipWs(text: string, i: number): number {
  while (i < text.length && isWs(text[i]!)) i += 1;
  return i;
}

function fail(text: string, i: number, what: string): never {
  const excerpt = text.slice(Math.max(0, i - 20), i + 20).replace(/\n/g, '\\n');
  throw new Error(`rawjson: ${what} at offset ${i} (near "${excerpt}")`);
}

/** End offset of the string starting at the opening quote `i`, plus its decoded value. */
function scanString(text: string, i: number): { end: number; value: string } {
  if (text[i] !== '"') fail(text, i, 'expected string');
  let out = '';
  let k = i + 1;
  while (k < text.length) {
    const ch = text[k]!;
    if (ch === '"') return { end: k + 1, value: out };
    if (ch === '\\') {
      const esc = text[k + 1];
      if (esc === undefined) break;
      if (esc === 'u') {
        const hex = text.slice(k + 2, k + 6);
        if (!/^[0-9a-fA-F]{4}$/.test(hex)) fail(text, k, 'bad unicode escape');
        out += String.fromCharCode(parseInt(hex, 16));
        k += 6;
      } else {
        const simple: Record<string, string> = {
          '"': '"', '\\': '\\', '/': '/', b: '\b', f: '\f', n: '\n', r: '\r', t: '\t',
        };
        const mapped = simple[esc];
        if (mapped === undefined) fail(text, k, `bad escape \\${esc}`);
        out += mapped;
        k += 2;
      }
    } else {
      out += ch;
      k += 1;
    }
  }
  fail(text, i, 'unterminated string');
}

function scanNumber(text: string, i: number): number {
  let k = i;
  if (text[k] === '-') k += 1;
  const digits = () => {
    const start = k;
    while (k < text.length && text[k]! >= '0' && text[k]! <= '9') k += 1;
    if (k === start) fail(text, k, 'expected digit');
  };
  digits();
  if (text[k] === '.') {
    k += 1;
    digits();
  }
  if (text[k] === 'e' || text[k] === 'E') {
    k += 1;
    if (text[k] === '+' || text[k] === '-') k += 1;
    digits();
  }
  return k;
}

function scanLiteral(text: string, i: number, word: string): number {
  if (text.startsWith(word, i)) return i + word.length;
  fail(text, i, `expected ${word}`);
}

/** End offset of the complete value starting at `i`. */
function skipValue(text: string, i: number): number {
  const ch = text[i];
  if (ch === undefined) fail(text, i, 'expected value');
  if (ch === '"') return scanString(text, i).end;
  if (ch === '{' || ch === '[') {
    const close = ch === '{' ? '}' : ']';
    let k = skipWs(text, i + 1);
    if (text[k] === close) return k + 1;
    for (;;) {
      if (ch === '{') {
        k = scanString(text, k).end;
        k = skipWs(text, k);
        if (text[k] !== ':') fail(text, k, "expected ':'");
        k = skipWs(text, k + 1);
      }
      k = skipValue(text, k);
      k = skipWs(text, k);
      if (text[k] === ',') {
        k = skipWs(text, k + 1);
        continue;
      }
      if (text[k] === close) return k + 1;
      fail(text, k, `expected ',' or '${close}'`);
    }
  }
  if (ch === 't') return scanLiteral(text, i, 'true');
  if (ch === 'f') return scanLiteral(text, i, 'false');
  if (ch === 'n') return scanLiteral(text, i, 'null');
  return scanNumber(text, i);
}

function describe(path: JsonPath, upTo: number): string {
  return '$' + path.slice(0, upTo).map((p) => (typeof p === 'number' ? `[${p}]` : `.${p}`)).join('');
}

function locate(text: string, i: number, path: JsonPath, depth: number): [number, number] {
  i = skipWs(text, i);
  if (depth === path.length) return [i, skipValue(text, i)];
  const seg = path[depth]!;
  if (typeof seg === 'string') {
    if (text[i] !== '{') fail(text, i, `expected object for ${describe(path, depth + 1)}`);
    let k = skipWs(text, i + 1);
    if (text[k] === '}') throw new Error(`rawjson: no key ${describe(path, depth + 1)}`);
    for (;;) {
      const key = scanString(text, k);
      k = skipWs(text, key.end);
      if (text[k] !== ':') fail(text, k, "expected ':'");
      k = skipWs(text, k + 1);
      if (key.value === seg) return locate(text, k, path, depth + 1);
      k = skipWs(text, skipValue(text, k));
      if (text[k] === ',') {
        k = skipWs(text, k + 1);
        continue;
      }
      if (text[k] === '}') throw new Error(`rawjson: no key ${describe(path, depth + 1)}`);
      fail(text, k, "expected ',' or '}'");
    }
  }
  if (text[i] !== '[') fail(text, i, `expected array for ${describe(path, depth + 1)}`);
  let k = skipWs(text, i + 1);
  if (text[k] === ']') throw new Error(`rawjson: no element ${describe(path, depth + 1)}`);
  for (let index = 0; ; index += 1) {
    if (index === seg) return locate(text, k, path, depth + 1);
    k = skipWs(text, skipValue(text, k));
    if (text[k] === ',') {
      k = skipWs(text, k + 1);
      continue;
    }
    if (text[k] === ']') throw new Error(`rawjson: no element ${describe(path, depth + 1)}`);
    fail(text, k, "expected ',' or ']'");
  }
}

/** The exact source text of the value at `path`, untouched. */
export function rawValue(text: string, path: JsonPath): string {
  const [start, end] = locate(text, 0, path, 0);
  return text.slice(start, end);
}

const NUMBER_RE = /^-?(0|[1-9]\d*)(\.\d+)?([eE][+-]?\d+)?$/;

/** Like rawValue but insists the literal is a JSON number. */
export function rawNumber(text: string, path: JsonPath): string {
  const raw = rawValue(text, path);
  if (!NUMBER_RE.test(raw)) {
    throw new Error(`rawjson: value at ${describe(path, path.length)} is not a number: ${raw}`);
  }
  return raw;
}

/** Raw number, or the fallback when the field is JSON null. */
export function rawNumberOr(text: string, path: JsonPath, fallback: string): string {
  const raw = rawValue(text, path);
  if (raw === 'null') return fallback;
  if (!NUMBER_RE.test(raw)) {
    throw new Error(`rawjson: value at ${describe(path, path.length)} is not a number: ${raw}`);
  }
  return raw;
}
