/**
 * Qualitative rating scale for building REQUEST ranges.
 *
 * Mirrors the service's seven-level calibration so dropdown picks
 * translate to numeric [lo, hi] before submission. Nothing here touches
 * displayed results; those come verbatim from service responses.
 */

export const RATING_BREAKPOINTS = [0, 0.01, 0.05, 0.2, 0.5, 0.7, 0.9, 1] as const;

export const RATING_LEVELS = [
  'Negligible',
  'Very Low',
  'Low',
  'Moderate',
  'Considerable',
  'High',
  'Very High',
] as const;

export type RatingLevel = (typeof RATING_LEVELS)[number];

export interface NumericRange {
  lo: number;
  hi: number;
}

const LEVEL_INDEX = new Map<string, number>(
  RATING_LEVELS.map((level, k) => [level.toLowerCase(), k]),
);

function levelIndex(text: string): number {
  const k = LEVEL_INDEX.get(text.trim().replace(/\s+/g, ' ').toLowerCase());
  if (k === undefined) throw new Error(`unknown rating level: ${JSON.stringify(text)}`);
  return k;
}

/** Numeric span of one level, or of "X to Y" across levels. */
export function ratingToRange(label: string): NumericRange {
  const parts = label.trim().replace(/\s+/g, ' ').split(/ to /i);
  if (parts.length === 1) {
    const k = levelIndex(parts[0]!);
    return { lo: RATING_BREAKPOINTS[k]!, hi: RATING_BREAKPOINTS[k + 1]! };
  }
  if (parts.length !== 2) throw new Error(`bad rating label: ${JSON.stringify(label)}`);
  const a = levelIndex(parts[0]!);
  const b = levelIndex(parts[1]!);
  if (b <= a) throw new Error(`rating span out of order: ${JSON.stringify(label)}`);
  return { lo: RATING_BREAKPOINTS[a]!, hi: RATING_BREAKPOINTS[b + 1]! };
}

/** All selectable labels: 7 single levels, then every ascending span. */
export function ratingOptions(): string[] {
  const out: string[] = [...RATING_LEVELS];
  for (let a = 0; a < RATING_LEVELS.length; a += 1) {
    for (let b = a + 1; b < RATING_LEVELS.length; b += 1) {
      out.push(`${RATING_LEVELS[a]} to ${RATING_LEVELS[b]}`);
    }
  }
  return out;
}
