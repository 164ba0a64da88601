/** Color-annotated log view with windowed rendering for large files.
 *
 * Spans arrive colored from the server; this view only lays them out. It
 * groups span fragments into lines and keeps just a window of lines in the
 * DOM, positioned with top/bottom spacers, so files with hundreds of
 * thousands of lines stay scrollable.
 */

import { InterchangeDoc, SpanDto } from "./types.js";
import { displayFragments } from "./text.js";

export const MAX_SPANS = 200_000;
const LINE_HEIGHT_PX = 18;
const OVERSCAN_LINES = 30;

interface Fragment {
  text: string;
  span: SpanDto;
}

type Line = Fragment[];

function buildLines(spans: SpanDto[]): Line[] {
  const lines: Line[] = [];
  let current: Line = [];
  for (const span of spans) {
    const fragments = displayFragments(span.pattern);
    for (let i = 0; i < fragments.length; i++) {
      if (i > 0) {
        lines.push(current);
        current = [];
      }
      if (fragments[i].length > 0) current.push({ text: fragments[i], span });
    }
  }
  lines.push(current);
  return lines;
}

export class LogView {
  private lines: Line[] = [];
  private metricLabel = "";
  private selectedPattern: string | null = null;
  private readonly viewport: HTMLElement;
  private readonly topSpacer: HTMLElement;
  private readonly content: HTMLElement;
  private readonly bottomSpacer: HTMLElement;
  private firstRendered = -1;
  private lastRendered = -1;

  constructor(private readonly root: HTMLElement) {
    this.viewport = document.createElement("div");
    this.viewport.className = "log-viewport";
    this.topSpacer = document.createElement("div");
    this.content = document.createElement("pre");
    this.content.className = "log-content";
    this.bottomSpacer = document.createElement("div");
    this.viewport.append(this.topSpacer, this.content, this.bottomSpacer);
    this.viewport.addEventListener("scroll", () => this.renderWindow());
    this.root.appendChild(this.viewport);
  }

  render(doc: InterchangeDoc, selectedPattern: string | null): void {
    if (doc.spans.length > MAX_SPANS) {
      this.lines = [];
      this.showMessage(
        `${doc.spans.length.toLocaleString()} spans is too many to display; ` +
          "use `lzwpat render --format html` for an offline view.",
      );
      return;
    }
    this.metricLabel = doc.metric;
    this.selectedPattern = selectedPattern;
    this.lines = buildLines(doc.spans);
    this.firstRendered = -1;
    this.lastRendered = -1;
    if (doc.spans.length === 0) {
      this.showMessage("empty file");
      return;
    }
    this.restoreViewport();
    this.renderWindow(true);
  }

  setSelectedPattern(pattern: string | null): void {
    this.selectedPattern = pattern;
    this.renderWindow(true);
  }

  private showMessage(message: string): void {
    this.restoreViewport();
    this.topSpacer.style.height = "0px";
    this.bottomSpacer.style.height = "0px";
    this.content.textContent = "";
    const div = document.createElement("div");
    div.className = "notice";
    div.textContent = message;
    this.content.appendChild(div);
  }

  private restoreViewport(): void {
    if (!this.viewport.isConnected) this.root.appendChild(this.viewport);
  }

  /** Render only the lines intersecting the scroll window. */
  private renderWindow(force = false): void {
    const total = this.lines.length;
    if (total === 0) return;
    const height = this.viewport.clientHeight || 600;
    const first = Math.max(
      0,
      Math.floor(this.viewport.scrollTop / LINE_HEIGHT_PX) - OVERSCAN_LINES,
    );
    const last = Math.min(
      total - 1,
      Math.ceil((this.viewport.scrollTop + height) / LINE_HEIGHT_PX) + OVERSCAN_LINES,
    );
    if (!force && first === this.firstRendered && last === this.lastRendered) return;
    this.firstRendered = first;
    this.lastRendered = last;

    this.topSpacer.style.height = `${first * LINE_HEIGHT_PX}px`;
    this.bottomSpacer.style.height = `${(total - 1 - last) * LINE_HEIGHT_PX}px`;
    this.content.textContent = "";
    for (let index = first; index <= last; index++) {
      for (const fragment of this.lines[index]) {
        this.content.appendChild(this.fragmentElement(fragment));
      }
      if (index < total - 1) this.content.appendChild(document.createTextNode("\n"));
    }
  }

  private fragmentElement(fragment: Fragment): HTMLElement {
    const el = document.createElement("span");
    el.className = "span-frag";
    el.textContent = fragment.text;
    el.style.backgroundColor = fragment.span.color;
    el.title = `pattern: ${fragment.span.pattern} | ${this.metricLabel}: ${fragment.span.metric_value}`;
    if (this.selectedPattern !== null && fragment.span.pattern === this.selectedPattern) {
      el.classList.add("selected");
    }
    return el;
  }
}
