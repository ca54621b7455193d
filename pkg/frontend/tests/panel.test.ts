import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { PanelView } from "../src/panel.js";
import { SessionStore } from "../src/state.js";
import { EVALUATE_ADD16, EVALUATE_ADD16_DIO48, RUN_ADD16 } from "./fixtures.js";
import { MockService } from "./mock.js";

function setup() {
  const service = new MockService()
    .on(
      (url, body) => url.endsWith("/evaluate") && body?.workload?.dio_combined === 48,
      () => EVALUATE_ADD16_DIO48,
    )
    .on(
      (url, body) => url.endsWith("/evaluate") && body?.machine?.xbs === 0,
      () => ({ errors: [{ field: "machine.xbs", message: "must be >= 1" }] }),
      400,
    )
    .on((url) => url.endsWith("/evaluate"), () => EVALUATE_ADD16)
    .on((url) => url.endsWith("/run"), () => RUN_ADD16);
  const store = new SessionStore(new ApiClient("", service.fetch), 0);
  const root = document.createElement("div");
  document.body.replaceChildren(root);
  const panel = new PanelView(root, store);
  return { service, store, root, panel };
}

function readout(root: HTMLElement, metric: string): string {
  const cell = root.querySelector<HTMLElement>(`[data-metric="${metric}"]`);
  if (!cell) throw new Error(`no readout for ${metric}`);
  return (cell.childNodes[0]?.textContent ?? "").trim();
}

function input(root: HTMLElement, param: string): HTMLInputElement {
  const element = root.querySelector<HTMLInputElement>(`input[data-param="${param}"]`);
  if (!element) throw new Error(`no input for ${param}`);
  return element;
}

describe("PanelView", () => {
  beforeEach(() => {
    document.body.replaceChildren();
  });

  it("renders the preset's combined throughput readout as 57.6", async () => {
    const { store, root } = setup();
    await store.loadPreset("table6/add16");
    expect(readout(root, "tp_combined_gops")).toBe("57.6");
    const badge = root.querySelector('[data-metric="tp_combined_gops"] .badge');
    expect(badge?.classList.contains("pass")).toBe(true);
  });

  it("editing dio_combined to 48 moves the readout to the service answer", async () => {
    const { store, root } = setup();
    await store.loadPreset("table6/add16");
    const field = input(root, "dio_combined");
    expect(field.value).toBe("16");
    field.value = "48";
    const settled = new Promise<void>((resolve) => {
      const unsubscribe = store.subscribe(() => {
        if (!store.columns[0].pending) {
          unsubscribe();
          resolve();
        }
      });
    });
    field.dispatchEvent(new Event("change"));
    await settled;
    expect(readout(root, "tp_combined_gops")).toBe("20.3");
    expect(store.columns[0].result.tp_combined_gops).toBe(20.253865590680057);
  });

  it("shows the service's field error inline for invalid input", async () => {
    const { store, root } = setup();
    await store.loadPreset("table6/add16");
    const field = input(root, "xbs");
    field.value = "0";
    const settled = new Promise<void>((resolve) => {
      const unsubscribe = store.subscribe(() => {
        if (store.columns[0].errors.length) {
          unsubscribe();
          resolve();
        }
      });
    });
    field.dispatchEvent(new Event("change"));
    await settled;
    const note = root.querySelector<HTMLElement>('[data-error-for="xbs"]');
    expect(note?.textContent).toBe("must be >= 1");
    // previous readouts remain visible
    expect(readout(root, "tp_combined_gops")).toBe("57.6");
  });

  it("renders parameters in display units", async () => {
    const { store, root } = setup();
    await store.loadPreset("table6/add16");
    expect(input(root, "cycle_time").value).toBe("10"); // ns
    expect(input(root, "bw").value).toBe("1000"); // Gbps
    expect(input(root, "ebit_cpu").value).toBe("15"); // pJ
  });
});
