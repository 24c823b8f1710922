/**
 * View state and the single-in-flight-run policy.
 *
 * Run and compare requests go through one RunGate: starting a new
 * request aborts whichever one is still pending (cancel-and-replace),
 * so the panels never show a stale result arriving late.
 */

import type { ComparisonDoc, PatchDoc, RunReportDoc, ScenarioDoc } from './types';

export const DEFAULT_ITERATIONS = 100_000;
export const FULL_ITERATIONS = 1_000_000;

export interface ConfigControls {
  iterations: number;
  seed: number;
  aggregation: string;
  distribution: string;
}

export interface ViewState {
  scenario: ScenarioDoc | null;
  builtinPatches: PatchDoc[];
  selectedBuiltin: Set<string>;
  /** JSON text in the custom patch editor; empty means none. */
  customPatchText: string;
  lastRun: { json: RunReportDoc; text: string } | null;
  lastComparison: { json: ComparisonDoc; text: string } | null;
  config: ConfigControls;
}

export function initialState(): ViewState {
  return {
    scenario: null,
    builtinPatches: [],
    selectedBuiltin: new Set(),
    customPatchText: '',
    lastRun: null,
    lastComparison: null,
    config: {
      iterations: DEFAULT_ITERATIONS,
      seed: 0,
      aggregation: 'threat_mean_of_means',
      distribution: 'uniform',
    },
  };
}

export class RunGate {
  private controller: AbortController | null = null;

  /** Abort any pending request and hand out the replacement's signal. */
  begin(): AbortSignal {
    this.controller?.abort();
    this.controller = new AbortController();
    return this.controller.signal;
  }

  /** Clear the gate, but only if `signal` is still the active request. */
  finish(signal: AbortSignal): void {
    if (this.controller !== null && this.controller.signal === signal) {
      this.controller = null;
    }
  }

  get busy(): boolean {
    return this.controller !== null;
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === 'AbortError';
}
