// @vitest-environment jsdom

import { describe, expect, it } from 'vitest';

import { renderComparison, renderRunReport } from '../src/comparisonView';
import type { ComparisonDoc, RunReportDoc } from '../src/types';

// Response text is hand-written so it contains numeric spellings that a
// JS stringify round-trip would change (1e-05 vs 0.00001). The view must
// show the original spelling, proving it slices the body instead of
// re-serializing parsed floats.
function dimension(mean: string): string {
  return `{
    "dimension": "operational",
    "mean": ${mean},
    "std": 0.002,
    "min": 0.0,
    "max": 0.9,
    "cube_root_class": "Low",
    "histogram": {"bin_edges": [0.0, 0.5, 1.0], "counts": [7, 3]},
    "per_threat_mean": {},
    "pairs": []
  }`;
}

function report(opMean: string, infraMean: string, resMean: string): string {
  return `{
    "scenario": "new england",
    "config": {"iterations": 1000, "seed": 0, "distribution": "uniform",
               "aggregation": "threat_mean_of_means", "histogram_bins": 2},
    "operational": ${dimension(opMean)},
    "infrastructural": ${dimension(infraMean)},
    "resilience": {"mean": ${resMean}, "std": 0.001, "min": 0.9, "max": 1.0,
                   "histogram": {"bin_edges": [0.9, 0.95, 1.0], "counts": [2, 8]}}
  }`;
}

const RUN_TEXT = report('1e-05', '0.008455093452380954', '0.99047');

const COMPARISON_TEXT = `{
  "baseline": ${report('0.010621226190476191', '0.008455093452380954', '0.9904618401785714')},
  "patches": [
    {
      "name": "harden-generation",
      "description": "hardens generation",
      "report": ${report('0.0077', '0.0056', '0.993306')},
      "deltas": {"op_risk_abs": -0.0029, "op_risk_pct": -27.4,
                 "infra_risk_abs": -0.0028, "infra_risk_pct": null,
                 "resilience_abs": 2.5e-03}
    },
    {
      "name": "underground-distribution",
      "description": "buries feeders",
      "report": ${report('0.0089', '0.0067', '0.992182')},
      "deltas": {"op_risk_abs": -0.0017, "op_risk_pct": -16.2,
                 "infra_risk_abs": -0.0017, "infra_risk_pct": -20.3,
                 "resilience_abs": 1.72e-03}
    }
  ],
  "ranking": ["underground-distribution", "harden-generation"]
}`;

function field(root: HTMLElement, name: string): string {
  const node = root.querySelector(`[data-field="${name}"]`);
  expect(node, `missing data-field ${name}`).not.toBeNull();
  return node!.textContent ?? '';
}

describe('renderRunReport', () => {
  it('displays means byte-for-byte from the response body', () => {
    const root = document.createElement('div');
    const parsed = JSON.parse(RUN_TEXT) as RunReportDoc;
    renderRunReport(root, RUN_TEXT, parsed);

    expect(field(root, 'run-operational-mean')).toBe('1e-05');
    expect(Number(field(root, 'run-operational-mean'))).toBe(parsed.operational.mean);
    expect(field(root, 'run-infrastructural-mean')).toBe('0.008455093452380954');
    expect(field(root, 'run-resilience-mean')).toBe('0.99047');
    expect(root.querySelectorAll('canvas.histogram')).toHaveLength(3);
    expect(root.querySelector('.run-config')!.textContent).toContain('seed 0');
    expect(root.textContent).toContain('cube-root class: Low');
  });
});

describe('renderComparison', () => {
  it('renders baseline and patch cards from raw slices', () => {
    const root = document.createElement('div');
    const parsed = JSON.parse(COMPARISON_TEXT) as ComparisonDoc;
    renderComparison(root, COMPARISON_TEXT, parsed);

    expect(field(root, 'baseline-operational-mean')).toBe('0.010621226190476191');
    expect(field(root, 'patch-harden-generation-resilience-mean')).toBe('0.993306');
    expect(field(root, 'patch-underground-distribution-res-gain')).toBe('1.72e-03');
    expect(field(root, 'patch-underground-distribution-op-pct')).toBe('-16.2');
  });

  it('prints n/a without a percent suffix when a relative delta is null', () => {
    const root = document.createElement('div');
    renderComparison(root, COMPARISON_TEXT, JSON.parse(COMPARISON_TEXT) as ComparisonDoc);

    const value = root.querySelector('[data-field="patch-harden-generation-infra-pct"]')!;
    expect(value.textContent).toBe('n/a');
    expect(value.parentElement!.querySelector('.stat-suffix')).toBeNull();

    const withPct = root.querySelector('[data-field="patch-underground-distribution-infra-pct"]')!;
    expect(withPct.parentElement!.querySelector('.stat-suffix')!.textContent).toBe('%');
  });

  it('badges the card named first in the ranking, regardless of array order', () => {
    const root = document.createElement('div');
    renderComparison(root, COMPARISON_TEXT, JSON.parse(COMPARISON_TEXT) as ComparisonDoc);

    const badges = root.querySelectorAll('[data-badge]');
    expect(badges).toHaveLength(1);
    expect(badges[0]!.getAttribute('data-badge')).toBe('underground-distribution');
    const badgedCard = badges[0]!.closest('[data-patch]')!;
    expect(badgedCard.getAttribute('data-patch')).toBe('underground-distribution');
    expect(root.querySelector('.ranking')!.textContent).toBe(
      'Ranking: 1. underground-distribution, 2. harden-generation',
    );
  });
});
