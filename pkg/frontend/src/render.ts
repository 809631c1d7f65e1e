// Framework-free DOM rendering. Every widget is rebuilt from state on
// change; at desk scale that keeps the data flow one-directional and easy
// to test under jsdom.

import type { FormState } from "./state.js";
import type {
  ClassTreeNode,
  IndividualRow,
  OntologySummary,
  PropertyRow,
  SelectOption,
} from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export interface FormRenderOptions {
  /** Re-render hook; called after any state mutation. */
  onChange: () => void;
  /** Called when the user picks a more specific main class (root only). */
  onSubclassChosen?: (classIri: string) => void;
  /** Hide the subclass picker (used inside previews). */
  readOnly?: boolean;
}

export function renderForm(state: FormState, options: FormRenderOptions): HTMLElement {
  const root = el("div", "of-form");
  root.dataset.mainClass = state.structure.mainClass;

  const heading = el("h3", "of-form-title", state.structure.label);
  root.appendChild(heading);

  if (!options.readOnly && state.path === "" &&
      state.structure.subclassOptions.length > 0) {
    root.appendChild(renderSubclassPicker(state, options));
  }

  for (const elementState of state.elementStates()) {
    const block = el("div", "of-element");
    block.dataset.property = elementState.element.property;
    const label = el("label", "of-label", elementState.element.label);
    label.title = elementState.element.property;
    block.appendChild(label);

    if (elementState.kind === "field") {
      block.appendChild(renderField(state, elementState.element.property, options));
    } else if (elementState.kind === "selector") {
      block.appendChild(renderSelector(state, elementState.element.property, options));
    } else {
      block.appendChild(renderSection(state, elementState.element.property, options));
    }
    root.appendChild(block);
  }
  return root;
}

function renderSubclassPicker(state: FormState, options: FormRenderOptions): HTMLElement {
  const wrap = el("div", "of-subclass");
  wrap.appendChild(el("span", "of-subclass-hint", "More specific class:"));
  const select = el("select", "of-subclass-select");
  const keep = el("option", undefined, state.structure.label);
  keep.value = state.structure.mainClass;
  select.appendChild(keep);
  for (const option of state.structure.subclassOptions) {
    const node = el("option", undefined, option.label);
    node.value = option.iri;
    node.title = option.iri;
    select.appendChild(node);
  }
  select.value = state.chosenClass;
  select.addEventListener("change", () => {
    if (select.value !== state.structure.mainClass) {
      options.onSubclassChosen?.(select.value);
    }
  });
  wrap.appendChild(select);
  return wrap;
}

function renderField(
  state: FormState,
  property: string,
  options: FormRenderOptions,
): HTMLElement {
  const fieldState = state.state(property);
  if (fieldState.kind !== "field") throw new Error("expected field");
  const element = fieldState.element;
  const wrap = el("div", "of-field");
  const input = el("input");
  input.type = element.widget === "number" ? "number"
    : element.widget === "checkbox" ? "checkbox"
    : element.widget === "date" ? "date" : "text";
  if (element.widget === "checkbox") {
    input.checked = fieldState.values[0] === "true";
    input.addEventListener("change", () => {
      state.setFieldValues(property, [input.checked ? "true" : "false"]);
      options.onChange();
    });
  } else {
    input.value = fieldState.values[0] ?? "";
    input.addEventListener("change", () => {
      state.setFieldValues(property, input.value === "" ? [] : [input.value]);
      options.onChange();
    });
  }
  wrap.appendChild(input);
  return wrap;
}

function optionLabel(options: SelectOption[], iri: string): string {
  return options.find((o) => o.iri === iri)?.label ?? iri;
}

function renderSelector(
  state: FormState,
  property: string,
  options: FormRenderOptions,
): HTMLElement {
  const selectorState = state.state(property);
  if (selectorState.kind !== "selector") throw new Error("expected selector");
  const element = selectorState.element;
  const wrap = el("div", "of-selector");

  const chips = el("div", "of-chips");
  for (const iri of selectorState.selected) {
    const chip = el("span", "of-chip", optionLabel(element.options, iri));
    chip.title = iri;
    const remove = el("button", "of-chip-remove", "✕");
    remove.type = "button";
    remove.addEventListener("click", () => {
      state.toggleSelection(property, iri);
      options.onChange();
    });
    chip.appendChild(remove);
    chips.appendChild(chip);
  }
  wrap.appendChild(chips);

  // searchable dropdown: filter box narrows the option list
  const search = el("input", "of-search");
  search.placeholder = "Selecciona una opción…";
  const list = el("ul", "of-options");
  const refresh = (keyword: string) => {
    list.textContent = "";
    for (const option of element.options) {
      if (!option.label.toLowerCase().includes(keyword.toLowerCase())) continue;
      const item = el("li", "of-option", option.label);
      item.title = option.iri;
      if (selectorState.selected.includes(option.iri)) {
        item.classList.add("of-option-selected");
      }
      item.addEventListener("click", () => {
        state.toggleSelection(property, option.iri);
        options.onChange();
      });
      list.appendChild(item);
    }
  };
  search.addEventListener("input", () => refresh(search.value));
  refresh("");
  wrap.appendChild(search);
  wrap.appendChild(list);
  return wrap;
}

function renderSection(
  state: FormState,
  property: string,
  options: FormRenderOptions,
): HTMLElement {
  const sectionState = state.state(property);
  if (sectionState.kind !== "section") throw new Error("expected section");
  const element = sectionState.element;
  const wrap = el("fieldset", "of-section");
  wrap.appendChild(el("legend", "of-section-title",
                      `Sección: ${element.form.label}`));

  for (const iri of sectionState.selected) {
    const chip = el("span", "of-chip", iri.split(/[#/]/).pop() ?? iri);
    chip.title = iri;
    wrap.appendChild(chip);
  }

  sectionState.creations.forEach((creation, index) => {
    const nested = el("div", "of-section-creation");
    nested.appendChild(renderForm(creation, { ...options, readOnly: false }));
    const remove = el("button", "of-remove-creation", "Remove");
    remove.type = "button";
    remove.addEventListener("click", () => {
      state.removeCreation(property, index);
      options.onChange();
    });
    nested.appendChild(remove);
    wrap.appendChild(nested);
  });

  const add = el("button", "of-add-creation", `Create new ${element.form.label}`);
  add.type = "button";
  add.addEventListener("click", () => {
    state.addCreation(property);
    options.onChange();
  });
  wrap.appendChild(add);
  return wrap;
}

// ---------------------------------------------------------------------------
// Admin views
// ---------------------------------------------------------------------------

export function renderOntologyTable(
  rows: OntologySummary[],
  onDetail: (id: string) => void,
): HTMLElement {
  const table = el("table", "of-table");
  const head = el("tr");
  for (const title of ["Id", "Nombre", "Detalle"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = el("tr");
    const idCell = el("td", undefined, row.iri);
    idCell.title = row.id;
    tr.appendChild(idCell);
    tr.appendChild(el("td", undefined, row.name));
    const link = el("button", "of-detail-link", "View detail");
    link.type = "button";
    link.addEventListener("click", () => onDetail(row.id));
    const cell = el("td");
    cell.appendChild(link);
    tr.appendChild(cell);
    table.appendChild(tr);
  }
  return table;
}

export function renderClassTree(
  node: ClassTreeNode,
  onSelect: (classIri: string) => void,
): HTMLElement {
  const list = el("ul", "of-tree");
  const item = el("li");
  const button = el("button", "of-tree-node", node.label);
  button.type = "button";
  button.title = node.iri;
  button.dataset.iri = node.iri;
  button.addEventListener("click", () => onSelect(node.iri));
  item.appendChild(button);
  for (const child of node.children) {
    item.appendChild(renderClassTree(child, onSelect));
  }
  list.appendChild(item);
  return list;
}

export function renderPropertiesTable(rows: PropertyRow[]): HTMLElement {
  const table = el("table", "of-table of-properties");
  const head = el("tr");
  for (const title of ["Domain", "Label", "Range", "Type"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = el("tr");
    tr.dataset.iri = row.iri;
    tr.appendChild(el("td", undefined, row.domain));
    tr.appendChild(el("td", undefined, row.label));
    tr.appendChild(el("td", undefined, row.range));
    tr.appendChild(el("td", undefined, row.type));
    table.appendChild(tr);
  }
  return table;
}

export function renderIndividualsTable(rows: IndividualRow[]): HTMLElement {
  const table = el("table", "of-table of-individuals");
  const head = el("tr");
  head.appendChild(el("th", undefined, "Label"));
  head.appendChild(el("th", undefined, "URI"));
  table.appendChild(head);
  for (const row of rows) {
    const tr = el("tr");
    tr.appendChild(el("td", undefined, row.label));
    tr.appendChild(el("td", undefined, row.uri));
    table.appendChild(tr);
  }
  return table;
}
