/** View state, encodable to URL query parameters for shareable views. */

import { METRICS, MetricName, SortColumn, SortDirection } from "./types.js";

export interface ViewState {
  fileId: string | null;
  metric: MetricName;
  colormap: string;
  prefixLength: number;
  sortColumn: SortColumn;
  sortDirection: SortDirection;
  selectedPattern: string | null;
}

export const DEFAULT_STATE: ViewState = {
  fileId: null,
  metric: "frequency",
  colormap: "jet",
  prefixLength: 5,
  sortColumn: "frequency",
  sortDirection: "desc",
  selectedPattern: null,
};

function isMetric(value: string): value is MetricName {
  return (METRICS as string[]).includes(value);
}

function isSortColumn(value: string): value is SortColumn {
  return value === "pattern" || isMetric(value);
}

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.fileId) params.set("file", state.fileId);
  if (state.metric !== DEFAULT_STATE.metric) params.set("metric", state.metric);
  if (state.colormap !== DEFAULT_STATE.colormap) params.set("colormap", state.colormap);
  if (state.prefixLength !== DEFAULT_STATE.prefixLength) {
    params.set("k", String(state.prefixLength));
  }
  if (state.sortColumn !== DEFAULT_STATE.sortColumn) params.set("sort", state.sortColumn);
  if (state.sortDirection !== DEFAULT_STATE.sortDirection) {
    params.set("dir", state.sortDirection);
  }
  if (state.selectedPattern !== null) params.set("sel", state.selectedPattern);
  return params.toString();
}

/** Decode a query string; anything malformed falls back to the default. */
export function decodeState(query: string): ViewState {
  const params = new URLSearchParams(query);
  const state: ViewState = { ...DEFAULT_STATE };
  const file = params.get("file");
  if (file) state.fileId = file;
  const metric = params.get("metric");
  if (metric && isMetric(metric)) state.metric = metric;
  const colormap = params.get("colormap");
  if (colormap) state.colormap = colormap;
  const k = Number(params.get("k"));
  if (Number.isInteger(k) && k >= 1) state.prefixLength = k;
  const sort = params.get("sort");
  if (sort && isSortColumn(sort)) state.sortColumn = sort;
  const dir = params.get("dir");
  if (dir === "asc" || dir === "desc") state.sortDirection = dir;
  const selected = params.get("sel");
  if (selected !== null) state.selectedPattern = selected;
  return state;
}
