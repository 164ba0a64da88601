/** Top bar: metric and colormap selectors, prefix length, file upload. */

import { METRICS } from "./types.js";
import { ViewState } from "./state.js";

export interface ControlsCallbacks {
  onChange(patch: Partial<ViewState>): void;
  onUpload(name: string, data: Blob): void;
}

export class Controls {
  constructor(
    private readonly root: HTMLElement,
    private readonly callbacks: ControlsCallbacks,
  ) {}

  render(state: ViewState, colormaps: string[]): void {
    this.root.textContent = "";

    this.root.appendChild(
      this.labelled(
        "metric",
        this.select(METRICS, state.metric, (value) =>
          this.callbacks.onChange({ metric: value as ViewState["metric"] }),
        ),
      ),
    );

    this.root.appendChild(
      this.labelled(
        "colormap",
        this.select(colormaps, state.colormap, (value) =>
          this.callbacks.onChange({ colormap: value }),
        ),
      ),
    );

    const prefixInput = document.createElement("input");
    prefixInput.type = "number";
    prefixInput.min = "1";
    prefixInput.step = "1";
    prefixInput.value = String(state.prefixLength);
    prefixInput.className = "prefix-input";
    prefixInput.addEventListener("change", () => {
      const value = Number(prefixInput.value);
      if (!Number.isInteger(value) || value < 1) {
        prefixInput.classList.add("invalid");
        prefixInput.value = String(state.prefixLength);
        return;
      }
      prefixInput.classList.remove("invalid");
      this.callbacks.onChange({ prefixLength: value });
    });
    this.root.appendChild(this.labelled("prefix length", prefixInput));

    const upload = document.createElement("input");
    upload.type = "file";
    upload.className = "upload-input";
    upload.addEventListener("change", () => {
      const file = upload.files?.[0];
      if (file) this.callbacks.onUpload(file.name, file);
    });
    this.root.appendChild(this.labelled("upload", upload));
  }

  private select(
    options: readonly string[],
    selected: string,
    onChange: (value: string) => void,
  ): HTMLSelectElement {
    const select = document.createElement("select");
    for (const option of options) {
      const el = document.createElement("option");
      el.value = option;
      el.textContent = option;
      el.selected = option === selected;
      select.appendChild(el);
    }
    select.addEventListener("change", () => onChange(select.value));
    return select;
  }

  private labelled(text: string, control: HTMLElement): HTMLElement {
    const label = document.createElement("label");
    label.className = "control";
    const caption = document.createElement("span");
    caption.textContent = text;
    label.append(caption, control);
    return label;
  }
}
