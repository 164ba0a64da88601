// @vitest-environment happy-dom
import { beforeEach, describe, expect, it, vi } from "vitest";

import { DEFAULT_STATE } from "../src/state.js";
import { PatternTableView } from "../src/table.js";
import { TableRow } from "../src/types.js";

const ROWS: TableRow[] = [
  { pattern: "A", length: 1, frequency: 3, freq_times_length: 3, prefix: null, prefix_count: 0 },
  { pattern: "AB", length: 2, frequency: 3, freq_times_length: 6, prefix: "AB", prefix_count: 3 },
  { pattern: "B", length: 1, frequency: 1, freq_times_length: 1, prefix: null, prefix_count: 0 },
];

describe("pattern table view", () => {
  let root: HTMLElement;
  let onSort: ReturnType<typeof vi.fn>;
  let onSelect: ReturnType<typeof vi.fn>;
  let view: PatternTableView;

  beforeEach(() => {
    root = document.createElement("div");
    onSort = vi.fn();
    onSelect = vi.fn();
    view = new PatternTableView(root, { onSort, onSelect });
  });

  it("renders rows in the order the server sent", () => {
    view.render(ROWS, { ...DEFAULT_STATE, fileId: "f" });
    const patterns = [...root.querySelectorAll("tbody td:first-child")].map(
      (td) => td.textContent,
    );
    expect(patterns).toEqual(["A", "AB", "B"]);
  });

  it("delegates header clicks to the sort callback", () => {
    view.render(ROWS, { ...DEFAULT_STATE, fileId: "f" });
    const headers = [...root.querySelectorAll("th")];
    const lengthHeader = headers.find((th) => th.textContent?.startsWith("length"))!;
    lengthHeader.click();
    expect(onSort).toHaveBeenCalledWith("length");
  });

  it("does not offer sorting on the prefix column", () => {
    view.render(ROWS, { ...DEFAULT_STATE, fileId: "f" });
    const headers = [...root.querySelectorAll("th")];
    const prefixHeader = headers.find((th) => th.textContent === "prefix")!;
    prefixHeader.click();
    expect(onSort).not.toHaveBeenCalled();
  });

  it("marks the active sort column and direction", () => {
    view.render(ROWS, { ...DEFAULT_STATE, fileId: "f", sortColumn: "frequency" });
    const sorted = root.querySelector("th.sorted");
    expect(sorted?.textContent).toContain("frequency");
    expect(sorted?.textContent).toContain("▼"); // desc marker
  });

  it("row click selects the pattern; clicking again clears it", () => {
    view.render(ROWS, { ...DEFAULT_STATE, fileId: "f" });
    const row = root.querySelectorAll("tbody tr")[1] as HTMLElement;
    row.click();
    expect(onSelect).toHaveBeenCalledWith("AB");

    view.render(ROWS, { ...DEFAULT_STATE, fileId: "f", selectedPattern: "AB" });
    const selected = root.querySelector("tr.selected td")!;
    expect(selected.textContent).toBe("AB");
    (root.querySelectorAll("tbody tr")[1] as HTMLElement).click();
    expect(onSelect).toHaveBeenLastCalledWith(null);
  });

  it("renders errors inline", () => {
    view.renderError("404: no file");
    expect(root.querySelector(".error")?.textContent).toBe("404: no file");
  });
});
