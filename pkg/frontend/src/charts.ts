/**
 * Hand-rolled canvas histograms for the run and comparison panels.
 *
 * Bars come straight from the service's histogram documents (equal-width
 * bins over [observed min, observed max]); no re-binning happens here.
 */

import type { HistogramDoc } from './types';

export interface HistogramStyle {
  color?: string;
  title?: string;
}

const MARGIN = { top: 18, right: 8, bottom: 22, left: 8 };

function edgeLabel(x: number): string {
  return x.toPrecision(4).replace(/\.?0+$/, '').replace(/\.?0+e/, 'e');
}

export function drawHistogram(
  canvas: HTMLCanvasElement,
  hist: HistogramDoc,
  style: HistogramStyle = {},
): void {
  const ctx = canvas.getContext('2d');
  if (ctx === null) return; // jsdom and other contexts without 2d support

  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const counts = hist.counts;
  const peak = Math.max(1, ...counts);

  ctx.fillStyle = style.color ?? '#4477aa';
  const barW = plotW / Math.max(1, counts.length);
  counts.forEach((count, k) => {
    const h = (count / peak) * plotH;
    ctx.fillRect(MARGIN.left + k * barW, MARGIN.top + plotH - h, Math.max(1, barW - 1), h);
  });

  ctx.fillStyle = '#222';
  ctx.font = '11px sans-serif';
  if (style.title !== undefined) {
    ctx.textAlign = 'left';
    ctx.fillText(style.title, MARGIN.left, 12);
  }
  const lo = hist.bin_edges[0];
  const hi = hist.bin_edges[hist.bin_edges.length - 1];
  if (lo !== undefined && hi !== undefined) {
    ctx.textAlign = 'left';
    ctx.fillText(edgeLabel(lo), MARGIN.left, height - 6);
    ctx.textAlign = 'right';
    ctx.fillText(edgeLabel(hi), width - MARGIN.right, height - 6);
  }
}

/** Canvas + drawn histogram, ready to append to a card. */
export function histogramCanvas(
  doc: Document,
  hist: HistogramDoc,
  style: HistogramStyle = {},
): HTMLCanvasElement {
  const canvas = doc.createElement('canvas');
  canvas.width = 320;
  canvas.height = 120;
  canvas.className = 'histogram';
  drawHistogram(canvas, hist, style);
  return canvas;
}
