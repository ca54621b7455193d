/**
 * Column comparison panel: parameters as rows, one column per configuration
 * (spreadsheet orientation), with inline editing and preset badges.
 */

import { PARAM_METAS, METRIC_METAS, displayToSubmit, formatSig, paramToDisplay } from "./format.js";
import type { SessionStore } from "./state.js";
import type { ColumnState } from "./state.js";

export class PanelView {
  private readonly root: HTMLElement;
  private readonly store: SessionStore;

  constructor(root: HTMLElement, store: SessionStore) {
    this.root = root;
    this.store = store;
    store.subscribe(() => this.render());
    this.render();
  }

  private inputKey(columnId: number, key: string): string {
    return `param-${columnId}-${key}`;
  }

  render(): void {
    const active = document.activeElement as HTMLElement | null;
    const activeKey = active?.dataset?.key;
    const selection =
      active instanceof HTMLInputElement
        ? { start: active.selectionStart, end: active.selectionEnd, value: active.value }
        : null;

    this.root.replaceChildren(this.buildTable());

    if (activeKey) {
      const restored = this.root.querySelector<HTMLInputElement>(`[data-key="${activeKey}"]`);
      if (restored) {
        if (selection && selection.value !== undefined) restored.value = selection.value;
        restored.focus();
        if (selection?.start != null && selection?.end != null) {
          restored.setSelectionRange(selection.start, selection.end);
        }
      }
    }
  }

  private row(parent: HTMLElement, className?: string): HTMLTableRowElement {
    const tr = document.createElement("tr");
    if (className) tr.className = className;
    parent.append(tr);
    return tr;
  }

  private cell(row: HTMLTableRowElement, className?: string): HTMLTableCellElement {
    const td = document.createElement("td");
    if (className) td.className = className;
    row.append(td);
    return td;
  }

  private buildTable(): HTMLTableElement {
    const table = document.createElement("table");
    table.className = "panel-table";
    const columns = this.store.columns;
    const body = document.createElement("tbody");
    table.append(body);

    const header = this.row(body);
    this.cell(header).textContent = "parameter";
    for (const column of columns) {
      const cell = this.cell(
        header,
        column.id === this.store.activeColumnId ? "col-head active" : "col-head",
      );
      const name = document.createElement("button");
      name.textContent = column.name;
      name.title = "make this the plane's base configuration";
      name.className = "col-name";
      name.addEventListener("click", () => this.store.setActiveColumn(column.id));
      const close = document.createElement("button");
      close.textContent = "×";
      close.className = "col-close";
      close.title = "remove column";
      close.addEventListener("click", () => this.store.removeColumn(column.id));
      cell.append(name, close);
      if (column.pending) {
        const spin = document.createElement("span");
        spin.className = "pending";
        spin.textContent = "…";
        cell.append(spin);
      }
    }

    for (const meta of PARAM_METAS) {
      const row = this.row(body);
      const label = this.cell(row, `param-label ${meta.section}`);
      label.textContent = meta.unit ? `${meta.label} [${meta.unit}]` : meta.label;
      for (const column of columns) {
        this.cell(row).append(this.buildInput(column, meta.key, meta.section));
      }
    }

    const divider = this.row(body, "divider");
    this.cell(divider).textContent = "outputs";
    for (const column of columns) {
      const cell = this.cell(divider);
      if (column.tdpFlags.length) {
        cell.textContent = `throttled: ${column.tdpFlags.join(", ")}`;
        cell.className = "tdp-flag";
      }
    }

    for (const metric of METRIC_METAS) {
      const row = this.row(body);
      const label = this.cell(row, `metric-label ${metric.group}`);
      label.textContent = `${metric.label} [${metric.unit}]`;
      for (const column of columns) {
        const cell = this.cell(
          row,
          `readout ${metric.group}${column.pending ? " stale" : ""}`,
        );
        cell.dataset.metric = metric.key;
        cell.dataset.column = String(column.id);
        cell.textContent = formatSig(column.result[metric.key]);
        const badge = column.badges?.find((b) => b.field === metric.key);
        if (badge) {
          const mark = document.createElement("span");
          mark.className = badge.passed ? "badge pass" : "badge fail";
          mark.textContent = badge.passed ? ` ✓ ${badge.expected}` : ` ✗ expected ${badge.expected}`;
          mark.title = badge.citation;
          cell.append(mark);
        }
      }
    }
    return table;
  }

  private buildInput(
    column: ColumnState,
    key: string,
    section: "machine" | "workload",
  ): HTMLElement {
    const meta = PARAM_METAS.find((m) => m.key === key)!;
    const wrap = document.createElement("div");
    const input = document.createElement("input");
    input.type = "text";
    input.dataset.key = this.inputKey(column.id, key);
    input.dataset.param = key;
    input.dataset.column = String(column.id);
    const params = section === "machine" ? column.params.machine : column.params.workload;
    input.value = paramToDisplay(meta, (params as unknown as Record<string, number>)[key]);
    input.addEventListener("change", () => {
      void this.store.editParameter(column.id, section, key, displayToSubmit(meta, input.value));
    });
    wrap.append(input);
    const error = column.errors.find(
      (e) => e.field === `workload.${key}` || e.field === `machine.${key}`,
    );
    if (error) {
      const note = document.createElement("div");
      note.className = "field-error";
      note.dataset.errorFor = key;
      note.textContent = error.message;
      wrap.append(note);
    }
    return wrap;
  }
}
