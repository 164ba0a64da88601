/** Orchestrates state changes into API fetches and view updates.
 *
 * Each state change triggers at most one table fetch and one spans fetch;
 * an in-flight fetch of the same kind is aborted first. The views are
 * injected so this logic runs headless in tests.
 */

import { ApiClient, ApiError } from "./api.js";
import { ViewState } from "./state.js";
import { InterchangeDoc, SortColumn, TableRow } from "./types.js";

export interface AppViews {
  renderTable(rows: TableRow[], state: ViewState): void;
  renderTableError(message: string): void;
  renderLog(doc: InterchangeDoc, selectedPattern: string | null): void;
  renderLogError(message: string): void;
  setSelectedPattern(pattern: string | null): void;
  stateChanged(state: ViewState): void;
}

function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}

export class App {
  private tableAbort: AbortController | null = null;
  private spansAbort: AbortController | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly views: AppViews,
    public state: ViewState,
  ) {}

  async start(): Promise<void> {
    if (this.state.fileId) {
      await Promise.all([this.fetchTable(), this.fetchSpans()]);
    }
  }

  /** Apply a state patch and run the fetches that patch requires. */
  async update(patch: Partial<ViewState>): Promise<void> {
    const previous = this.state;
    this.state = { ...previous, ...patch };
    this.views.stateChanged(this.state);

    if (this.state.fileId === null) return;

    const fileChanged = this.state.fileId !== previous.fileId;
    const needsTable =
      fileChanged ||
      this.state.sortColumn !== previous.sortColumn ||
      this.state.sortDirection !== previous.sortDirection ||
      this.state.prefixLength !== previous.prefixLength;
    const needsSpans =
      fileChanged ||
      this.state.metric !== previous.metric ||
      this.state.colormap !== previous.colormap ||
      this.state.prefixLength !== previous.prefixLength;

    const work: Promise<void>[] = [];
    if (needsTable) work.push(this.fetchTable());
    if (needsSpans) work.push(this.fetchSpans());
    if (!needsTable && !needsSpans && "selectedPattern" in patch) {
      this.views.setSelectedPattern(this.state.selectedPattern);
    }
    await Promise.all(work);
  }

  /** Header click: toggle direction on the same column, else sort it desc. */
  async sortBy(column: SortColumn): Promise<void> {
    if (this.state.sortColumn === column) {
      await this.update({
        sortDirection: this.state.sortDirection === "desc" ? "asc" : "desc",
      });
    } else {
      await this.update({
        sortColumn: column,
        sortDirection: column === "pattern" ? "asc" : "desc",
      });
    }
  }

  async upload(name: string, data: Blob | ArrayBuffer): Promise<void> {
    try {
      const entry = await this.api.upload(name, data);
      await this.update({ fileId: entry.id, selectedPattern: null });
    } catch (error) {
      this.views.renderTableError(describe(error));
    }
  }

  private async fetchTable(): Promise<void> {
    this.tableAbort?.abort();
    const controller = new AbortController();
    this.tableAbort = controller;
    try {
      const rows = await this.api.table(
        this.state.fileId!,
        {
          metric: this.state.sortColumn,
          order: this.state.sortDirection,
          prefixLen: this.state.prefixLength,
        },
        controller.signal,
      );
      this.views.renderTable(rows, this.state);
    } catch (error) {
      if (!isAbort(error)) this.views.renderTableError(describe(error));
    }
  }

  private async fetchSpans(): Promise<void> {
    this.spansAbort?.abort();
    const controller = new AbortController();
    this.spansAbort = controller;
    try {
      const doc = await this.api.spans(
        this.state.fileId!,
        {
          metric: this.state.metric,
          colormap: this.state.colormap,
          prefixLen: this.state.prefixLength,
        },
        controller.signal,
      );
      this.views.renderLog(doc, this.state.selectedPattern);
    } catch (error) {
      if (!isAbort(error)) this.views.renderLogError(describe(error));
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return `${error.status}: ${error.message}`;
  return error instanceof Error ? error.message : String(error);
}
