/**
 * Scenario gallery: the service's published presets, loadable as columns
 * with expected-vs-computed badges.
 */

import type { ApiClient } from "./api.js";
import type { SessionStore } from "./state.js";
import type { ScenarioSummary } from "./types.js";

export class GalleryView {
  private readonly root: HTMLElement;
  private readonly store: SessionStore;
  private readonly client: ApiClient;
  private scenarios: ScenarioSummary[] = [];

  constructor(root: HTMLElement, store: SessionStore, client: ApiClient) {
    this.root = root;
    this.store = store;
    this.client = client;
  }

  async load(): Promise<void> {
    try {
      const response = await this.client.listScenarios();
      this.scenarios = response.scenarios;
      this.render();
    } catch (err) {
      this.root.textContent = `scenario catalog unavailable: ${String(err)}`;
    }
  }

  private render(): void {
    this.root.replaceChildren();
    const groups = new Map<string, ScenarioSummary[]>();
    for (const scenario of this.scenarios) {
      const group = scenario.id.split("/")[0];
      const bucket = groups.get(group) ?? [];
      bucket.push(scenario);
      groups.set(group, bucket);
    }
    for (const [group, entries] of groups) {
      const heading = document.createElement("h3");
      heading.textContent = group;
      this.root.append(heading);
      const list = document.createElement("div");
      list.className = "gallery-group";
      for (const scenario of entries) {
        const button = document.createElement("button");
        button.className = "preset";
        button.dataset.scenario = scenario.id;
        button.textContent = scenario.id.split("/").slice(1).join("/");
        button.title = `${scenario.description}\n${scenario.citation}`;
        button.addEventListener("click", () => {
          void this.store.loadPreset(scenario.id).catch((err) => {
            button.classList.add("preset-error");
            button.title = String(err);
          });
        });
        list.append(button);
      }
      this.root.append(list);
    }
  }
}
