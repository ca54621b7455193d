/**
 * Explorer wiring: client, session store, panel, plane, gallery.
 * The service base URL comes from ?service=... (default same-origin :8000).
 */

import { ApiClient } from "./api.js";
import { GalleryView } from "./gallery.js";
import { PanelView } from "./panel.js";
import { PlaneControls, PlaneView } from "./plane.js";
import { SessionStore } from "./state.js";

function serviceBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("service");
  if (fromQuery) return fromQuery;
  return `${window.location.protocol}//${window.location.hostname}:8000`;
}

async function bootstrap(): Promise<void> {
  const client = new ApiClient(serviceBaseUrl());
  const store = new SessionStore(client);

  new PanelView(document.getElementById("panel")!, store);
  new PlaneControls(document.getElementById("plane-controls")!, store);
  new PlaneView(
    document.getElementById("plane-canvas") as HTMLCanvasElement,
    document.getElementById("probe-readout")!,
    document.getElementById("plane-banner")!,
    store,
  );
  const gallery = new GalleryView(document.getElementById("gallery")!, store, client);

  document.getElementById("add-column")!.addEventListener("click", () => {
    void store
      .addColumn("custom", {
        machine: {},
        workload: { oc: 144, pac: 512, dio_cpu: 48, dio_combined: 16, label: "custom" },
      })
      .then(() => store.refreshPlane());
  });
  document.getElementById("export-columns")!.addEventListener("click", () => {
    const blob = new Blob([store.exportColumns()], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "bitlet-columns.json";
    link.click();
    URL.revokeObjectURL(link.href);
  });
  document.getElementById("refresh-plane")!.addEventListener("click", () => {
    void store.refreshPlane();
  });

  await gallery.load();
  // seed the session with the worked-example column
  await store
    .addColumn("shifted-vector-add", {
      machine: {},
      workload: { oc: 144, pac: 512, dio_cpu: 48, dio_combined: 16, label: "shifted-vector-add" },
    })
    .catch((err) => {
      document.getElementById("plane-banner")!.textContent =
        `service unreachable at ${serviceBaseUrl()}: ${String(err)}`;
    });
  await store.refreshPlane();
}

void bootstrap();
