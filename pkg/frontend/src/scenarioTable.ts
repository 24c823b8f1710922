/**
 * Editable risk-register table.
 *
 * Layout mirrors the register itself: one heading row per threat
 * (importance and occurrence probability), one row per vulnerability
 * (conditional probability and both impacts). Every range edits either
 * as two numeric bounds or through a rating dropdown that fills them in.
 *
 * Apply gathers the table back into a scenario document and hands it to
 * the submit callback (which PUTs it). A bound pair with lo > hi or a
 * non-numeric entry blocks submission client-side: the offending editor
 * is flagged inline and no request is sent. Service-side validation
 * failures land in showIssues.
 */

import { ratingOptions, ratingToRange } from './ratings';
import type { RangeDoc, ScenarioDoc } from './types';

export type ApplyHandler = (doc: ScenarioDoc) => Promise<void>;

interface RangeSlot {
  threat: number;
  vuln: number | null;
  field: 'probability' | 'operational_impact' | 'infrastructural_impact';
  lo: HTMLInputElement;
  hi: HTMLInputElement;
  errorEl: HTMLElement;
}

const RATING_CHOICES = ratingOptions();

export class ScenarioTable {
  private readonly root: HTMLElement;
  private readonly doc: Document;
  private readonly onApply: ApplyHandler;
  private current: ScenarioDoc | null = null;
  private slots: RangeSlot[] = [];
  private importanceInputs: HTMLInputElement[] = [];
  private nameInput: HTMLInputElement | null = null;
  private issuesEl: HTMLElement | null = null;

  constructor(root: HTMLElement, onApply: ApplyHandler) {
    this.root = root;
    this.doc = root.ownerDocument;
    this.onApply = onApply;
  }

  render(scenario: ScenarioDoc): void {
    this.current = scenario;
    this.slots = [];
    this.importanceInputs = [];
    this.root.textContent = '';

    const issues = this.el('div', 'issues');
    issues.hidden = true;
    this.issuesEl = issues;
    this.root.appendChild(issues);

    const nameRow = this.el('div', 'scenario-name');
    const nameLabel = this.el('label');
    nameLabel.textContent = 'Scenario name ';
    const nameInput = this.doc.createElement('input');
    nameInput.type = 'text';
    nameInput.value = scenario.name;
    nameLabel.appendChild(nameInput);
    nameRow.appendChild(nameLabel);
    this.nameInput = nameInput;
    this.root.appendChild(nameRow);

    const table = this.el('table', 'register');
    const head = this.doc.createElement('thead');
    const headRow = this.doc.createElement('tr');
    for (const title of ['Threat / Vulnerability', 'Probability', 'Operational impact', 'Infrastructural impact']) {
      const th = this.doc.createElement('th');
      th.textContent = title;
      headRow.appendChild(th);
    }
    head.appendChild(headRow);
    table.appendChild(head);

    const body = this.doc.createElement('tbody');
    scenario.threats.forEach((threat, ti) => {
      const threatRow = this.el('tr', 'threat-row');
      const nameCell = this.doc.createElement('td');
      nameCell.textContent = threat.name + ' ';
      const importance = this.doc.createElement('input');
      importance.type = 'number';
      importance.step = '0.05';
      importance.min = '0';
      importance.max = '1';
      importance.value = String(threat.importance);
      importance.title = 'importance weight';
      importance.className = 'importance';
      nameCell.appendChild(importance);
      this.importanceInputs.push(importance);
      threatRow.appendChild(nameCell);
      threatRow.appendChild(this.rangeCell(ti, null, 'probability', threat.probability));
      threatRow.appendChild(this.doc.createElement('td'));
      threatRow.appendChild(this.doc.createElement('td'));
      body.appendChild(threatRow);

      threat.vulnerabilities.forEach((vuln, vi) => {
        const row = this.el('tr', 'vuln-row');
        const cell = this.doc.createElement('td');
        cell.textContent = vuln.name;
        row.appendChild(cell);
        row.appendChild(this.rangeCell(ti, vi, 'probability', vuln.probability));
        row.appendChild(this.rangeCell(ti, vi, 'operational_impact', vuln.operational_impact));
        row.appendChild(this.rangeCell(ti, vi, 'infrastructural_impact', vuln.infrastructural_impact));
        body.appendChild(row);
      });
    });
    table.appendChild(body);
    this.root.appendChild(table);

    const apply = this.doc.createElement('button');
    apply.type = 'button';
    apply.textContent = 'Apply changes';
    apply.className = 'apply-scenario';
    apply.addEventListener('click', () => {
      void this.submit();
    });
    this.root.appendChild(apply);
  }

  /** Current table contents as a document, or null if a local check blocked it. */
  collect(): ScenarioDoc | null {
    if (this.current === null) return null;
    let blocked = false;
    for (const slot of this.slots) {
      const lo = Number.parseFloat(slot.lo.value);
      const hi = Number.parseFloat(slot.hi.value);
      slot.errorEl.textContent = '';
      slot.errorEl.hidden = true;
      if (Number.isNaN(lo) || Number.isNaN(hi)) {
        slot.errorEl.textContent = 'both bounds must be numbers';
        slot.errorEl.hidden = false;
        blocked = true;
      } else if (lo > hi) {
        slot.errorEl.textContent = 'lower bound exceeds upper bound';
        slot.errorEl.hidden = false;
        blocked = true;
      }
    }
    if (blocked) return null;

    const doc: ScenarioDoc = {
      name: this.nameInput?.value ?? this.current.name,
      description: this.current.description,
      threats: this.current.threats.map((threat, ti) => ({
        name: threat.name,
        probability: { lo: 0, hi: 0 },
        importance: Number.parseFloat(this.importanceInputs[ti]?.value ?? String(threat.importance)),
        vulnerabilities: threat.vulnerabilities.map((vuln) => ({
          name: vuln.name,
          probability: { lo: 0, hi: 0 },
          operational_impact: { lo: 0, hi: 0 },
          infrastructural_impact: { lo: 0, hi: 0 },
        })),
      })),
    };
    for (const slot of this.slots) {
      const range: RangeDoc = {
        lo: Number.parseFloat(slot.lo.value),
        hi: Number.parseFloat(slot.hi.value),
      };
      const threat = doc.threats[slot.threat]!;
      if (slot.vuln === null) {
        threat.probability = range;
      } else {
        threat.vulnerabilities[slot.vuln]![slot.field] = range;
      }
    }
    return doc;
  }

  async submit(): Promise<void> {
    this.clearIssues();
    const doc = this.collect();
    if (doc === null) return; // local blocks already shown inline
    await this.onApply(doc);
  }

  showIssues(issues: Array<{ path: string; message: string }>): void {
    if (this.issuesEl === null) return;
    this.issuesEl.textContent = '';
    for (const issue of issues) {
      const line = this.el('div', 'issue');
      line.textContent = issue.path === '' ? issue.message : `${issue.path}: ${issue.message}`;
      this.issuesEl.appendChild(line);
    }
    this.issuesEl.hidden = issues.length === 0;
  }

  clearIssues(): void {
    if (this.issuesEl !== null) {
      this.issuesEl.textContent = '';
      this.issuesEl.hidden = true;
    }
  }

  private el(tag: string, className?: string): HTMLElement {
    const node = this.doc.createElement(tag);
    if (className !== undefined) node.className = className;
    return node;
  }

  private rangeCell(
    threat: number,
    vuln: number | null,
    field: RangeSlot['field'],
    range: RangeDoc,
  ): HTMLElement {
    const cell = this.doc.createElement('td');
    const wrap = this.el('div', 'range-edit');

    const lo = this.doc.createElement('input');
    lo.type = 'number';
    lo.step = '0.01';
    lo.value = String(range.lo);
    lo.className = 'lo';
    const hi = this.doc.createElement('input');
    hi.type = 'number';
    hi.step = '0.01';
    hi.value = String(range.hi);
    hi.className = 'hi';

    const select = this.doc.createElement('select') as HTMLSelectElement;
    select.className = 'rating';
    const custom = this.doc.createElement('option');
    custom.value = '';
    custom.textContent = 'numeric';
    select.appendChild(custom);
    for (const label of RATING_CHOICES) {
      const option = this.doc.createElement('option');
      option.value = label;
      option.textContent = label;
      select.appendChild(option);
    }
    if (range.rating !== undefined && RATING_CHOICES.includes(range.rating)) {
      select.value = range.rating;
    }
    select.addEventListener('change', () => {
      if (select.value === '') return;
      const picked = ratingToRange(select.value);
      lo.value = String(picked.lo);
      hi.value = String(picked.hi);
    });
    const detach = () => {
      select.value = '';
    };
    lo.addEventListener('input', detach);
    hi.addEventListener('input', detach);

    const error = this.el('span', 'range-error');
    error.hidden = true;

    wrap.appendChild(lo);
    wrap.appendChild(hi);
    wrap.appendChild(select);
    wrap.appendChild(error);
    cell.appendChild(wrap);
    this.slots.push({ threat, vuln, field, lo, hi, errorEl: error });
    return cell;
  }
}
