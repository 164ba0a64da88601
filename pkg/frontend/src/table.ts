/** Sortable pattern table; ordering is always the server's, never local. */

import { SortColumn, TableRow } from "./types.js";
import { ViewState } from "./state.js";

const COLUMNS: { key: SortColumn | "prefix"; label: string; sortable: boolean }[] = [
  { key: "pattern", label: "pattern", sortable: true },
  { key: "length", label: "length", sortable: true },
  { key: "frequency", label: "frequency", sortable: true },
  { key: "freq_times_length", label: "freq × length", sortable: true },
  { key: "prefix", label: "prefix", sortable: false },
  { key: "prefix_count", label: "prefix count", sortable: true },
];

export interface TableCallbacks {
  onSort(column: SortColumn): void;
  onSelect(pattern: string | null): void;
}

export class PatternTableView {
  constructor(
    private readonly root: HTMLElement,
    private readonly callbacks: TableCallbacks,
  ) {}

  render(rows: TableRow[], state: ViewState): void {
    this.root.textContent = "";
    const table = document.createElement("table");
    table.className = "pattern-table";

    const head = table.createTHead().insertRow();
    for (const column of COLUMNS) {
      const th = document.createElement("th");
      th.textContent = column.label;
      if (column.sortable) {
        th.classList.add("sortable");
        if (state.sortColumn === column.key) {
          th.classList.add("sorted");
          th.textContent += state.sortDirection === "desc" ? " ▼" : " ▲";
        }
        th.addEventListener("click", () => this.callbacks.onSort(column.key as SortColumn));
      }
      head.appendChild(th);
    }

    const body = table.createTBody();
    for (const row of rows) {
      const tr = body.insertRow();
      tr.classList.add("pattern-row");
      if (state.selectedPattern === row.pattern) tr.classList.add("selected");
      tr.addEventListener("click", () => {
        this.callbacks.onSelect(state.selectedPattern === row.pattern ? null : row.pattern);
      });
      const cells = [
        row.pattern,
        String(row.length),
        String(row.frequency),
        String(row.freq_times_length),
        row.prefix ?? "",
        String(row.prefix_count),
      ];
      for (const [index, text] of cells.entries()) {
        const td = tr.insertCell();
        td.textContent = text;
        if (index === 0 || index === 4) td.classList.add("mono");
        else td.classList.add("num");
      }
    }
    this.root.appendChild(table);
  }

  renderError(message: string): void {
    this.root.textContent = "";
    const div = document.createElement("div");
    div.className = "error";
    div.textContent = message;
    this.root.appendChild(div);
  }
}
