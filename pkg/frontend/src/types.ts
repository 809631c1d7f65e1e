// Wire types mirroring the Core API JSON contracts. The UI never derives
// ontology facts itself; everything displayed comes from these payloads.

export interface OntologySummary {
  id: string;
  iri: string;
  name: string;
}

export interface ClassTreeNode {
  iri: string;
  label: string;
  children: ClassTreeNode[];
}

export interface PropertyRow {
  iri: string;
  domain: string;
  label: string;
  range: string;
  type: string;
}

export interface IndividualRow {
  label: string;
  uri: string;
}

export interface OntologyDetail {
  classes: ClassTreeNode;
  properties: PropertyRow[];
  individuals: IndividualRow[];
}

export interface SelectOption {
  iri: string;
  label: string;
}

export interface FieldElement {
  kind: "field";
  property: string;
  label: string;
  datatype: string;
  widget: "text" | "number" | "checkbox" | "date";
  functional: boolean;
}

export interface SelectorElement {
  kind: "selector";
  property: string;
  label: string;
  rangeClass: string;
  multiple: boolean;
  options: SelectOption[];
}

export interface SectionElement {
  kind: "section";
  property: string;
  label: string;
  rangeClass: string;
  form: FormStructure;
}

export type FormElement = FieldElement | SelectorElement | SectionElement;

export interface FormStructure {
  mainClass: string;
  label: string;
  subclassOptions: SelectOption[];
  elements: FormElement[];
  warnings?: string[];
}

export interface LiteralValue {
  value: string;
  datatype?: string;
}

export interface ValueEntry {
  property: string;
  literals?: LiteralValue[];
  individuals?: string[];
  creations?: Submission[];
}

export interface Submission {
  chosenClass: string;
  displayLabel?: string;
  values: ValueEntry[];
}

export interface InlinePair {
  contextClass: string;
  rangeClass: string;
}

export interface FormConfig {
  hiddenProperties: string[];
  inlinePairs: InlinePair[];
  labelOverrides: Record<string, string>;
}

export interface MintedIndividual {
  iri: string;
  class: string;
}

export interface PopulationOutcome {
  rootIri: string;
  minted: MintedIndividual[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: Record<string, unknown>;
}

export function emptyConfig(): FormConfig {
  return { hiddenProperties: [], inlinePairs: [], labelOverrides: {} };
}
