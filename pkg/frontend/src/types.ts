/** Wire types for the lzwpat HTTP API. */

export type MetricName = "frequency" | "length" | "freq_times_length" | "prefix_count";

export type SortColumn = "pattern" | MetricName;

export type SortDirection = "asc" | "desc";

export const METRICS: MetricName[] = [
  "frequency",
  "length",
  "freq_times_length",
  "prefix_count",
];

export interface FileEntry {
  id: string;
  name: string;
  size: number;
  uploaded_at: string;
}

export interface TableRow {
  pattern: string;
  length: number;
  frequency: number;
  freq_times_length: number;
  prefix: string | null;
  prefix_count: number;
}

export interface SpanDto {
  start: number;
  end: number;
  pattern: string;
  metric_value: number;
  normalized: number;
  color: string;
}

export interface InterchangeDoc {
  original_length: number;
  metric: MetricName;
  colormap: string;
  prefix_length: number;
  spans: SpanDto[];
  table: TableRow[];
}
