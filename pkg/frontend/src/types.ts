/**
 * Shapes of the documents the microresil HTTP API exchanges.
 *
 * These mirror the service's JSON layouts exactly; the UI never invents
 * fields and never recomputes the numeric ones.
 */

export interface RangeDoc {
  lo: number;
  hi: number;
  /** Present only when [lo, hi] is exactly a canonical rating span. */
  rating?: string;
}

export interface VulnerabilityDoc {
  name: string;
  probability: RangeDoc;
  operational_impact: RangeDoc;
  infrastructural_impact: RangeDoc;
}

export interface ThreatDoc {
  name: string;
  probability: RangeDoc;
  importance: number;
  vulnerabilities: VulnerabilityDoc[];
}

export interface ScenarioDoc {
  name: string;
  description: string;
  threats: ThreatDoc[];
}

/** Patch ops are edited as opaque JSON; the service validates them. */
export interface PatchDoc {
  name: string;
  description: string;
  ops: unknown[];
}

export interface ConfigDoc {
  iterations: number;
  seed: number;
  distribution: string;
  aggregation: string;
  histogram_bins: number;
}

export interface HistogramDoc {
  bin_edges: number[];
  counts: number[];
}

export interface PairRiskDoc {
  threat: string;
  vulnerability: string;
  mean: number;
  std: number;
}

export interface DimensionDoc {
  dimension: string;
  mean: number;
  std: number;
  min: number;
  max: number;
  cube_root_class: string;
  histogram: HistogramDoc;
  per_threat_mean: Record<string, number>;
  pairs: PairRiskDoc[];
}

export interface ScoreDoc {
  mean: number;
  std: number;
  min: number;
  max: number;
  histogram: HistogramDoc;
}

export interface RunReportDoc {
  scenario: string;
  config: ConfigDoc;
  operational: DimensionDoc;
  infrastructural: DimensionDoc;
  resilience: ScoreDoc;
}

export interface DeltasDoc {
  op_risk_abs: number;
  op_risk_pct: number | null;
  infra_risk_abs: number;
  infra_risk_pct: number | null;
  resilience_abs: number;
}

export interface PatchOutcomeDoc {
  name: string;
  description: string;
  report: RunReportDoc;
  deltas: DeltasDoc;
}

export interface ComparisonDoc {
  baseline: RunReportDoc;
  patches: PatchOutcomeDoc[];
  ranking: string[];
}

/** The service's single error envelope. */
export interface ProblemDoc {
  code: string;
  message: string;
  path: string;
  issues: Array<{ path: string; message: string }>;
}

export interface ConfigOverrides {
  iterations?: number;
  seed?: number;
  distribution?: string;
  aggregation?: string;
  histogram_bins?: number;
  workers?: number;
}
