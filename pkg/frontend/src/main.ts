/**
 * Application wiring: scenario editor, config controls, run and compare.
 *
 * Interactive runs default to 100,000 iterations for quick feedback; the
 * full-run button switches to 1,000,000. Run and compare share one
 * RunGate, so clicking again cancels the outstanding request.
 */

import { ApiClient, ApiError } from './api';
import { renderComparison, renderRunReport } from './comparisonView';
import { ScenarioTable } from './scenarioTable';
import { FULL_ITERATIONS, initialState, isAbort, RunGate } from './state';
import type { ConfigOverrides, PatchDoc } from './types';

const AGGREGATIONS = ['threat_mean_of_means', 'pair_mean', 'pair_sum'];
const DISTRIBUTIONS = ['uniform', 'triangular_low_mode'];

export interface App {
  ready: Promise<void>;
  table: ScenarioTable;
}

export function init(root: HTMLElement, api: ApiClient): App {
  const doc = root.ownerDocument;
  const state = initialState();
  const gate = new RunGate();

  const make = (tag: string, className?: string, text?: string): HTMLElement => {
    const node = doc.createElement(tag);
    if (className !== undefined) node.className = className;
    if (text !== undefined) node.textContent = text;
    return node;
  };

  root.textContent = '';
  const status = make('div', 'status');
  status.setAttribute('data-field', 'status');
  const scenarioPanel = make('section', 'scenario-panel');
  const configPanel = make('section', 'config-panel');
  const patchPanel = make('section', 'patch-panel');
  const runPanel = make('section', 'run-panel');
  const comparePanel = make('section', 'compare-panel');
  for (const panel of [status, scenarioPanel, configPanel, patchPanel, runPanel, comparePanel]) {
    root.appendChild(panel);
  }

  const setStatus = (text: string): void => {
    status.textContent = text;
  };

  const table = new ScenarioTable(scenarioPanel, async (document_) => {
    try {
      await api.putScenario(document_);
      const fresh = await api.getScenario(); // reflect exactly what persisted
      state.scenario = fresh.json;
      table.render(fresh.json);
      setStatus('scenario saved');
    } catch (err) {
      if (err instanceof ApiError) {
        const issues = err.problem.issues.length
          ? err.problem.issues
          : [{ path: err.problem.path, message: err.problem.message }];
        table.showIssues(issues);
        setStatus('scenario rejected');
      } else {
        setStatus(String(err));
      }
    }
  });

  // Config controls.
  const iterations = doc.createElement('input');
  iterations.type = 'number';
  iterations.min = '1';
  iterations.value = String(state.config.iterations);
  iterations.className = 'iterations';
  const seed = doc.createElement('input');
  seed.type = 'number';
  seed.min = '0';
  seed.value = String(state.config.seed);
  seed.className = 'seed';
  const aggregation = doc.createElement('select') as HTMLSelectElement;
  aggregation.className = 'aggregation';
  for (const value of AGGREGATIONS) {
    const option = doc.createElement('option');
    option.value = value;
    option.textContent = value;
    aggregation.appendChild(option);
  }
  const distribution = doc.createElement('select') as HTMLSelectElement;
  distribution.className = 'distribution';
  for (const value of DISTRIBUTIONS) {
    const option = doc.createElement('option');
    option.value = value;
    option.textContent = value;
    distribution.appendChild(option);
  }
  const labelled = (text: string, control: HTMLElement): HTMLElement => {
    const label = make('label', 'control', text + ' ');
    label.appendChild(control);
    return label;
  };
  configPanel.appendChild(labelled('iterations', iterations));
  configPanel.appendChild(labelled('seed', seed));
  configPanel.appendChild(labelled('aggregation', aggregation));
  configPanel.appendChild(labelled('distribution', distribution));

  const overrides = (): ConfigOverrides | null => {
    const it = Number.parseInt(iterations.value, 10);
    const sd = Number.parseInt(seed.value, 10);
    if (!Number.isFinite(it) || it < 1 || !Number.isFinite(sd) || sd < 0) {
      setStatus('iterations must be >= 1 and seed >= 0');
      return null;
    }
    return {
      iterations: it,
      seed: sd,
      aggregation: aggregation.value,
      distribution: distribution.value,
    };
  };

  const runButton = make('button', 'run', 'Run') as HTMLButtonElement;
  runButton.setAttribute('type', 'button');
  const fullRunButton = make('button', 'full-run', `Full run (${FULL_ITERATIONS.toLocaleString('en-US')})`) as HTMLButtonElement;
  fullRunButton.setAttribute('type', 'button');
  const compareButton = make('button', 'compare', 'Compare patches') as HTMLButtonElement;
  compareButton.setAttribute('type', 'button');
  configPanel.appendChild(runButton);
  configPanel.appendChild(fullRunButton);
  configPanel.appendChild(compareButton);

  // Patch selection: one toggle per bundled patch, plus a JSON editor.
  const toggles = make('div', 'patch-toggles');
  patchPanel.appendChild(toggles);
  const customLabel = make('label', 'custom-patch', 'Custom patch (JSON) ');
  const custom = doc.createElement('textarea');
  custom.rows = 6;
  custom.className = 'custom-patch-text';
  customLabel.appendChild(custom);
  patchPanel.appendChild(customLabel);

  const renderToggles = (): void => {
    toggles.textContent = '';
    for (const patch of state.builtinPatches) {
      const label = make('label', 'patch-toggle');
      const box = doc.createElement('input');
      box.type = 'checkbox';
      box.value = patch.name;
      box.checked = state.selectedBuiltin.has(patch.name);
      box.addEventListener('change', () => {
        if (box.checked) state.selectedBuiltin.add(patch.name);
        else state.selectedBuiltin.delete(patch.name);
      });
      label.appendChild(box);
      label.appendChild(doc.createTextNode(' ' + patch.name));
      label.title = patch.description;
      toggles.appendChild(label);
    }
  };

  const selectedPatches = (): PatchDoc[] | null => {
    const picked = state.builtinPatches.filter((p) => state.selectedBuiltin.has(p.name));
    const text = custom.value.trim();
    if (text !== '') {
      try {
        picked.push(JSON.parse(text) as PatchDoc);
      } catch (err) {
        setStatus(`custom patch is not valid JSON: ${(err as Error).message}`);
        return null;
      }
    }
    return picked;
  };

  const doRun = async (): Promise<void> => {
    const config = overrides();
    if (config === null) return;
    const signal = gate.begin();
    setStatus('running...');
    try {
      const res = await api.run(config, signal);
      state.lastRun = { json: res.json, text: res.text };
      renderRunReport(runPanel, res.text, res.json);
      setStatus('run complete');
    } catch (err) {
      if (isAbort(err)) return; // superseded by a newer click
      setStatus(err instanceof ApiError ? err.message : String(err));
    } finally {
      gate.finish(signal);
    }
  };

  const doCompare = async (): Promise<void> => {
    const config = overrides();
    if (config === null) return;
    const patches = selectedPatches();
    if (patches === null) return;
    const signal = gate.begin();
    setStatus('comparing...');
    try {
      const res = await api.compare(patches, config, signal);
      state.lastComparison = { json: res.json, text: res.text };
      renderComparison(comparePanel, res.text, res.json);
      setStatus('comparison complete');
    } catch (err) {
      if (isAbort(err)) return;
      setStatus(err instanceof ApiError ? err.message : String(err));
    } finally {
      gate.finish(signal);
    }
  };

  runButton.addEventListener('click', () => {
    void doRun();
  });
  fullRunButton.addEventListener('click', () => {
    iterations.value = String(FULL_ITERATIONS);
    void doRun();
  });
  compareButton.addEventListener('click', () => {
    void doCompare();
  });

  const ready = (async () => {
    const [scenario, patches] = await Promise.all([api.getScenario(), api.getBuiltinPatches()]);
    state.scenario = scenario.json;
    state.builtinPatches = patches.json;
    table.render(scenario.json);
    renderToggles();
    setStatus('ready');
  })();

  return { ready, table };
}

const mount = typeof document !== 'undefined' ? document.getElementById('microresil-app') : null;
if (mount !== null) {
  const params = new URLSearchParams(window.location.search);
  const app = init(mount, new ApiClient(params.get('api') ?? ''));
  void app.ready.catch((err) => {
    mount.textContent = `failed to reach the service: ${err}`;
  });
}
