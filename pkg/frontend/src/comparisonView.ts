/**
 * Result panels: a single run's report and the patch comparison cards.
 *
 * Every number printed here is sliced verbatim out of the service
 * response body (see rawjson); the UI does no risk arithmetic. Cards get
 * data-field attributes so tests can read exactly what is displayed.
 */

import { histogramCanvas } from './charts';
import type { JsonPath } from './rawjson';
import { rawNumber, rawNumberOr } from './rawjson';
import type { ComparisonDoc, RunReportDoc } from './types';

const SCORE_COLORS: Record<string, string> = {
  operational: '#4477aa',
  infrastructural: '#ee6677',
  resilience: '#228833',
};

function el(doc: Document, tag: string, className?: string, text?: string): HTMLElement {
  const node = doc.createElement(tag);
  if (className !== undefined) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function statLine(
  doc: Document,
  label: string,
  value: string,
  field: string,
  suffix = '',
): HTMLElement {
  const line = el(doc, 'div', 'stat');
  line.appendChild(el(doc, 'span', 'stat-label', label));
  const valueEl = el(doc, 'span', 'stat-value', value);
  valueEl.setAttribute('data-field', field);
  line.appendChild(valueEl);
  if (suffix !== '') line.appendChild(el(doc, 'span', 'stat-suffix', suffix));
  return line;
}

/** One report's stats + three histograms, appended as a card. */
function reportCard(
  doc: Document,
  title: string,
  responseText: string,
  report: RunReportDoc,
  basePath: JsonPath,
  fieldPrefix: string,
): HTMLElement {
  const card = el(doc, 'div', 'card report-card');
  card.setAttribute('data-card', fieldPrefix);
  card.appendChild(el(doc, 'h3', 'card-title', title));

  for (const [key, label] of [
    ['operational', 'operational risk'],
    ['infrastructural', 'infrastructural risk'],
  ] as const) {
    const mean = rawNumber(responseText, [...basePath, key, 'mean']);
    card.appendChild(statLine(doc, label, mean, `${fieldPrefix}-${key}-mean`));
    card.appendChild(
      el(doc, 'div', 'stat-note', `cube-root class: ${report[key].cube_root_class}`),
    );
  }
  const resilience = rawNumber(responseText, [...basePath, 'resilience', 'mean']);
  card.appendChild(statLine(doc, 'resilience', resilience, `${fieldPrefix}-resilience-mean`));

  const charts = el(doc, 'div', 'charts');
  for (const key of ['operational', 'infrastructural', 'resilience'] as const) {
    charts.appendChild(
      histogramCanvas(doc, report[key].histogram, { color: SCORE_COLORS[key], title: key }),
    );
  }
  card.appendChild(charts);
  return card;
}

/** Render the report of a plain run. */
export function renderRunReport(
  root: HTMLElement,
  responseText: string,
  report: RunReportDoc,
): void {
  const doc = root.ownerDocument;
  root.textContent = '';
  const header = el(
    doc,
    'div',
    'run-config',
    `${report.scenario}: ${report.config.iterations} iterations, seed ${report.config.seed}, ` +
      `${report.config.distribution}, ${report.config.aggregation}`,
  );
  root.appendChild(header);
  root.appendChild(reportCard(doc, 'Run result', responseText, report, [], 'run'));
}

/** Render baseline + per-patch cards with the ranking badge. */
export function renderComparison(
  root: HTMLElement,
  responseText: string,
  comparison: ComparisonDoc,
): void {
  const doc = root.ownerDocument;
  root.textContent = '';

  root.appendChild(
    reportCard(doc, 'Baseline', responseText, comparison.baseline, ['baseline'], 'baseline'),
  );

  comparison.patches.forEach((outcome, k) => {
    const path: JsonPath = ['patches', k];
    const card = reportCard(
      doc,
      outcome.name,
      responseText,
      outcome.report,
      [...path, 'report'],
      `patch-${outcome.name}`,
    );
    card.setAttribute('data-patch', outcome.name);

    const deltas = el(doc, 'div', 'deltas');
    deltas.appendChild(
      statLine(
        doc,
        'operational reduction',
        rawNumberOr(responseText, [...path, 'deltas', 'op_risk_pct'], 'n/a'),
        `patch-${outcome.name}-op-pct`,
        outcome.deltas.op_risk_pct === null ? '' : '%',
      ),
    );
    deltas.appendChild(
      statLine(
        doc,
        'infrastructural reduction',
        rawNumberOr(responseText, [...path, 'deltas', 'infra_risk_pct'], 'n/a'),
        `patch-${outcome.name}-infra-pct`,
        outcome.deltas.infra_risk_pct === null ? '' : '%',
      ),
    );
    deltas.appendChild(
      statLine(
        doc,
        'resilience gain',
        rawNumber(responseText, [...path, 'deltas', 'resilience_abs']),
        `patch-${outcome.name}-res-gain`,
      ),
    );
    card.appendChild(deltas);

    if (comparison.ranking[0] === outcome.name) {
      const badge = el(doc, 'span', 'badge', 'top ranked');
      badge.setAttribute('data-badge', outcome.name);
      card.querySelector('.card-title')?.appendChild(badge);
    }
    root.appendChild(card);
  });

  const ranking = el(doc, 'div', 'ranking');
  ranking.textContent =
    'Ranking: ' + comparison.ranking.map((name, k) => `${k + 1}. ${name}`).join(', ');
  root.appendChild(ranking);
}
