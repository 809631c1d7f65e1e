// Client-side working state for a form being filled in, and the
// administrator's config draft. Validation here is deliberately weaker than
// the server's: the one rule enforced before submit is single-valuedness of
// functional fields and selectors (sections don't carry the flag on the
// wire, so the server owns that case).

import type {
  FieldElement,
  FormConfig,
  FormElement,
  FormStructure,
  InlinePair,
  SectionElement,
  SelectorElement,
  Submission,
  ValueEntry,
} from "./types.js";

export interface Violation {
  path: string;
  property: string;
  message: string;
}

interface FieldState {
  kind: "field";
  element: FieldElement;
  values: string[];
}

interface SelectorState {
  kind: "selector";
  element: SelectorElement;
  selected: string[];
}

interface SectionState {
  kind: "section";
  element: SectionElement;
  // chips for already-linked individuals (shown when editing)
  selected: string[];
  // nested form states exist only while the user is creating individuals
  creations: FormState[];
}

export type ElementState = FieldState | SelectorState | SectionState;

export class FormState {
  readonly structure: FormStructure;
  readonly path: string;
  chosenClass: string;
  displayLabel?: string;
  private readonly states = new Map<string, ElementState>();
  private readonly dirtyPaths = new Set<string>();

  constructor(structure: FormStructure, path = "") {
    this.structure = structure;
    this.path = path;
    this.chosenClass = structure.mainClass;
    for (const element of structure.elements) {
      this.states.set(element.property, this.initialState(element));
    }
  }

  private initialState(element: FormElement): ElementState {
    switch (element.kind) {
      case "field":
        return { kind: "field", element, values: [] };
      case "selector":
        return { kind: "selector", element, selected: [] };
      case "section":
        return { kind: "section", element, selected: [], creations: [] };
    }
  }

  elementStates(): ElementState[] {
    return this.structure.elements.map(
      (element) => this.states.get(element.property)!,
    );
  }

  state(property: string): ElementState {
    const found = this.states.get(property);
    if (!found) throw new Error(`no element for property ${property}`);
    return found;
  }

  private childPath(property: string, index?: number): string {
    const base = this.path === "" ? property : `${this.path}/${property}`;
    return index === undefined ? base : `${base}/${index}`;
  }

  private markDirty(property: string): void {
    this.dirtyPaths.add(this.childPath(property));
  }

  dirty(): boolean {
    if (this.dirtyPaths.size > 0) return true;
    for (const state of this.states.values()) {
      if (state.kind === "section" &&
          state.creations.some((creation) => creation.dirty())) {
        return true;
      }
    }
    return false;
  }

  dirtyFlags(): Set<string> {
    const flags = new Set(this.dirtyPaths);
    for (const state of this.states.values()) {
      if (state.kind === "section") {
        for (const creation of state.creations) {
          for (const flag of creation.dirtyFlags()) flags.add(flag);
        }
      }
    }
    return flags;
  }

  setDisplayLabel(label: string | undefined): void {
    this.displayLabel = label === "" ? undefined : label;
    this.dirtyPaths.add(this.path === "" ? "@label" : `${this.path}/@label`);
  }

  setFieldValues(property: string, values: string[]): void {
    const state = this.state(property);
    if (state.kind !== "field") throw new Error(`${property} is not a field`);
    state.values = values.filter((v) => v !== "");
    this.markDirty(property);
  }

  toggleSelection(property: string, iri: string): void {
    const state = this.state(property);
    if (state.kind === "field") throw new Error(`${property} is a field`);
    const selected = state.selected;
    const at = selected.indexOf(iri);
    if (at >= 0) {
      selected.splice(at, 1);
    } else if (state.kind === "selector" && !state.element.multiple) {
      state.selected = [iri];
    } else {
      selected.push(iri);
    }
    this.markDirty(property);
  }

  addCreation(property: string): FormState {
    const state = this.state(property);
    if (state.kind !== "section") throw new Error(`${property} is not a section`);
    const nested = new FormState(
      state.element.form,
      this.childPath(property, state.creations.length),
    );
    state.creations.push(nested);
    this.markDirty(property);
    return nested;
  }

  removeCreation(property: string, index: number): void {
    const state = this.state(property);
    if (state.kind !== "section") throw new Error(`${property} is not a section`);
    state.creations.splice(index, 1);
    this.markDirty(property);
  }

  /** Functional-cardinality check; run before every submit. */
  validate(): Violation[] {
    const violations: Violation[] = [];
    for (const state of this.states.values()) {
      const property = state.element.property;
      if (state.kind === "field" && state.element.functional &&
          state.values.length > 1) {
        violations.push({
          path: this.childPath(property),
          property,
          message: `${state.element.label} admits a single value`,
        });
      }
      if (state.kind === "selector" && !state.element.multiple &&
          state.selected.length > 1) {
        violations.push({
          path: this.childPath(property),
          property,
          message: `${state.element.label} admits a single selection`,
        });
      }
      if (state.kind === "section") {
        for (const creation of state.creations) {
          violations.push(...creation.validate());
        }
      }
    }
    return violations;
  }

  buildSubmission(): Submission {
    const violations = this.validate();
    if (violations.length > 0) {
      throw new Error(violations[0].message);
    }
    const values: ValueEntry[] = [];
    for (const state of this.elementStates()) {
      const property = state.element.property;
      if (state.kind === "field" && state.values.length > 0) {
        values.push({
          property,
          literals: state.values.map((value) => ({ value })),
        });
      } else if (state.kind === "selector" && state.selected.length > 0) {
        values.push({ property, individuals: [...state.selected] });
      } else if (state.kind === "section" &&
                 (state.selected.length > 0 || state.creations.length > 0)) {
        const entry: ValueEntry = { property };
        if (state.selected.length > 0) entry.individuals = [...state.selected];
        if (state.creations.length > 0) {
          entry.creations = state.creations.map((c) => c.buildSubmission());
        }
        values.push(entry);
      }
    }
    const submission: Submission = { chosenClass: this.chosenClass, values };
    if (this.displayLabel !== undefined) {
      submission.displayLabel = this.displayLabel;
    }
    return submission;
  }

  /** Load a server-provided submission (reopen-for-edit). Clears dirt. */
  loadSubmission(submission: Submission): void {
    this.chosenClass = submission.chosenClass;
    this.displayLabel = submission.displayLabel;
    for (const state of this.states.values()) {
      if (state.kind === "field") state.values = [];
      else if (state.kind === "selector") state.selected = [];
      else { state.selected = []; state.creations = []; }
    }
    for (const entry of submission.values) {
      const state = this.states.get(entry.property);
      if (!state) continue; // property no longer on the form
      if (state.kind === "field") {
        state.values = (entry.literals ?? []).map((lit) => lit.value);
      } else if (state.kind === "selector") {
        state.selected = [...(entry.individuals ?? [])];
      } else {
        state.selected = [...(entry.individuals ?? [])];
        state.creations = (entry.creations ?? []).map((creation, index) => {
          const nested = new FormState(
            state.element.form, this.childPath(entry.property, index));
          nested.loadSubmission(creation);
          return nested;
        });
      }
    }
    this.dirtyPaths.clear();
  }
}

// ---------------------------------------------------------------------------
// Config draft
// ---------------------------------------------------------------------------

function sortedPairs(pairs: InlinePair[]): InlinePair[] {
  return [...pairs].sort((a, b) =>
    (a.contextClass + a.rangeClass).localeCompare(b.contextClass + b.rangeClass));
}

export function configsEqual(a: FormConfig, b: FormConfig): boolean {
  const hiddenA = [...a.hiddenProperties].sort();
  const hiddenB = [...b.hiddenProperties].sort();
  if (JSON.stringify(hiddenA) !== JSON.stringify(hiddenB)) return false;
  if (JSON.stringify(sortedPairs(a.inlinePairs)) !==
      JSON.stringify(sortedPairs(b.inlinePairs))) return false;
  const keysA = Object.keys(a.labelOverrides).sort();
  const keysB = Object.keys(b.labelOverrides).sort();
  if (JSON.stringify(keysA) !== JSON.stringify(keysB)) return false;
  return keysA.every((key) => a.labelOverrides[key] === b.labelOverrides[key]);
}

export class ConfigDraft {
  private saved: FormConfig;
  hiddenProperties: Set<string>;
  inlinePairs: InlinePair[];
  labelOverrides: Record<string, string>;

  constructor(config: FormConfig) {
    this.saved = config;
    this.hiddenProperties = new Set(config.hiddenProperties);
    this.inlinePairs = sortedPairs(config.inlinePairs);
    this.labelOverrides = { ...config.labelOverrides };
  }

  toWire(): FormConfig {
    return {
      hiddenProperties: [...this.hiddenProperties].sort(),
      inlinePairs: sortedPairs(this.inlinePairs),
      labelOverrides: { ...this.labelOverrides },
    };
  }

  unsaved(): boolean {
    return !configsEqual(this.toWire(), this.saved);
  }

  markSaved(serverConfig: FormConfig): void {
    this.saved = serverConfig;
  }

  hide(propertyIri: string): void {
    this.hiddenProperties.add(propertyIri);
  }

  unhide(propertyIri: string): void {
    this.hiddenProperties.delete(propertyIri);
  }

  addInlinePair(contextClass: string, rangeClass: string): void {
    const exists = this.inlinePairs.some(
      (pair) => pair.contextClass === contextClass && pair.rangeClass === rangeClass);
    if (!exists) {
      this.inlinePairs = sortedPairs(
        [...this.inlinePairs, { contextClass, rangeClass }]);
    }
  }

  removeInlinePair(contextClass: string, rangeClass: string): void {
    this.inlinePairs = this.inlinePairs.filter(
      (pair) => pair.contextClass !== contextClass || pair.rangeClass !== rangeClass);
  }

  setLabelOverride(iri: string, label: string): void {
    if (label === "") delete this.labelOverrides[iri];
    else this.labelOverrides[iri] = label;
  }
}
