/** Thin typed client over the lzwpat API endpoints. */

import {
  FileEntry,
  InterchangeDoc,
  MetricName,
  SortColumn,
  SortDirection,
  TableRow,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

export interface TableQuery {
  metric: SortColumn;
  order: SortDirection;
  prefixLen: number;
  top?: number;
}

export interface SpansQuery {
  metric: MetricName;
  colormap: string;
  prefixLen: number;
}

async function parseError(response: Response): Promise<never> {
  let detail = `${response.status} ${response.statusText}`;
  try {
    const body = await response.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(response.status, detail);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, { signal });
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  async upload(name: string, data: Blob | ArrayBuffer): Promise<FileEntry> {
    const response = await this.fetchFn(
      `${this.baseUrl}/api/files?name=${encodeURIComponent(name)}`,
      { method: "POST", body: data },
    );
    if (!response.ok) await parseError(response);
    return (await response.json()) as FileEntry;
  }

  async table(fileId: string, query: TableQuery, signal?: AbortSignal): Promise<TableRow[]> {
    const params = new URLSearchParams({
      metric: query.metric,
      order: query.order,
      prefix_len: String(query.prefixLen),
    });
    if (query.top !== undefined) params.set("top", String(query.top));
    return this.get(`/api/files/${fileId}/table?${params}`, signal);
  }

  async spans(
    fileId: string,
    query: SpansQuery,
    signal?: AbortSignal,
  ): Promise<InterchangeDoc> {
    const params = new URLSearchParams({
      metric: query.metric,
      colormap: query.colormap,
      prefix_len: String(query.prefixLen),
    });
    return this.get(`/api/files/${fileId}/spans?${params}`, signal);
  }

  async colormaps(signal?: AbortSignal): Promise<string[]> {
    return this.get("/api/colormaps", signal);
  }
}
