/** Browser entry point: wires state, API client, and views to the DOM. */

import { ApiClient } from "./api.js";
import { App, AppViews } from "./app.js";
import { Controls } from "./controls.js";
import { LogView } from "./logview.js";
import { decodeState, encodeState, ViewState } from "./state.js";
import { PatternTableView } from "./table.js";

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

async function boot(): Promise<void> {
  const api = new ApiClient();
  const logView = new LogView(byId("log"));
  let app: App;

  const tableView = new PatternTableView(byId("table"), {
    onSort: (column) => void app.sortBy(column),
    onSelect: (pattern) => void app.update({ selectedPattern: pattern }),
  });

  const controls = new Controls(byId("controls"), {
    onChange: (patch) => void app.update(patch),
    onUpload: (name, data) => void app.upload(name, data),
  });

  let colormaps: string[] = ["sequential_blue", "coolwarm", "jet"];
  try {
    colormaps = await api.colormaps();
  } catch {
    // offline bootstrap: keep the built-in list
  }

  const views: AppViews = {
    renderTable: (rows, state) => tableView.render(rows, state),
    renderTableError: (message) => tableView.renderError(message),
    renderLog: (doc, selected) => logView.render(doc, selected),
    renderLogError: (message) => {
      byId("log").textContent = message;
    },
    setSelectedPattern: (pattern) => logView.setSelectedPattern(pattern),
    stateChanged: (state: ViewState) => {
      controls.render(state, colormaps);
      const query = encodeState(state);
      history.replaceState(null, "", query ? `?${query}` : location.pathname);
      byId("status").textContent = state.fileId
        ? `file ${state.fileId.slice(0, 12)}…`
        : "upload a file to begin";
    },
  };

  app = new App(api, views, decodeState(location.search));
  views.stateChanged(app.state);
  await app.start();
}

void boot();
