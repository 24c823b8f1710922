/**
 * Thin fetch client for the microresil service.
 *
 * Every successful call keeps the raw response text next to the parsed
 * document; views slice displayed numbers out of the text. Error bodies
 * (the service's one envelope shape) surface as ApiError.
 */

import type {
  ComparisonDoc,
  ConfigOverrides,
  PatchDoc,
  ProblemDoc,
  RunReportDoc,
  ScenarioDoc,
} from './types';

export interface ApiResponse<T> {
  status: number;
  /** Body exactly as received; the source of every displayed number. */
  text: string;
  json: T;
}

export class ApiError extends Error {
  readonly status: number;
  readonly problem: ProblemDoc;

  constructor(status: number, problem: ProblemDoc) {
    super(`${problem.code}: ${problem.message}`);
    this.status = status;
    this.problem = problem;
  }
}

export class ApiClient {
  private readonly base: string;

  constructor(base = '') {
    this.base = base.replace(/\/$/, '');
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<ApiResponse<T>> {
    const res = await fetch(this.base + path, {
      method,
      headers: body === undefined ? undefined : { 'content-type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
      signal,
    });
    const text = await res.text();
    let json: unknown;
    try {
      json = JSON.parse(text);
    } catch {
      throw new Error(`non-JSON response (${res.status}) from ${path}`);
    }
    if (!res.ok) throw new ApiError(res.status, json as ProblemDoc);
    return { status: res.status, text, json: json as T };
  }

  getScenario(): Promise<ApiResponse<ScenarioDoc>> {
    return this.request('GET', '/api/scenario');
  }

  putScenario(doc: ScenarioDoc): Promise<ApiResponse<ScenarioDoc>> {
    return this.request('PUT', '/api/scenario', doc);
  }

  getBuiltinScenario(): Promise<ApiResponse<ScenarioDoc>> {
    return this.request('GET', '/api/builtin/new-england');
  }

  getBuiltinPatches(): Promise<ApiResponse<PatchDoc[]>> {
    return this.request('GET', '/api/patches/builtin');
  }

  run(overrides: ConfigOverrides, signal?: AbortSignal): Promise<ApiResponse<RunReportDoc>> {
    return this.request('POST', '/api/run', overrides, signal);
  }

  compare(
    patches: PatchDoc[],
    overrides: ConfigOverrides,
    signal?: AbortSignal,
  ): Promise<ApiResponse<ComparisonDoc>> {
    return this.request('POST', '/api/compare', { patches, ...overrides }, signal);
  }
}
