// @vitest-environment jsdom
import { describe, expect, it } from "vitest";

import { FormState } from "../src/state.js";
import {
  renderClassTree,
  renderForm,
  renderPropertiesTable,
} from "../src/render.js";
import type { ClassTreeNode, FormStructure } from "../src/types.js";

const NS = "http://ex.org/deep#";

/** Form whose single section nests another identical form, `depth` levels. */
function nested(depth: number): FormStructure {
  const base: FormStructure = {
    mainClass: NS + `Level${depth}`,
    label: `Level${depth}`,
    subclassOptions: [],
    elements: [
      {
        kind: "selector",
        property: NS + "pick",
        label: "pick",
        rangeClass: NS + "Thing",
        multiple: false,
        options: [
          { iri: NS + "a", label: "Alpha" },
          { iri: NS + "b", label: "Beta" },
        ],
      },
    ],
  };
  if (depth === 0) return base;
  base.elements.push({
    kind: "section",
    property: NS + "child",
    label: "child",
    rangeClass: NS + `Level${depth - 1}`,
    form: nested(depth - 1),
  });
  return base;
}

function click(target: Element): void {
  target.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

describe("renderForm", () => {
  it("renders any nesting depth the engine produces", () => {
    const state = new FormState(nested(6));
    let node = renderForm(state, { onChange: () => {} });
    // open a creation at every level by re-rendering after each click
    for (let level = 0; level < 6; level++) {
      const buttons = node.querySelectorAll("button.of-add-creation");
      click(buttons[buttons.length - 1]);
      node = renderForm(state, { onChange: () => {} });
    }
    expect(node.querySelectorAll(".of-section-creation")).toHaveLength(6);
    // root is itself a form; six more render inside the nested creations
    expect(node.classList.contains("of-form")).toBe(true);
    expect(node.querySelectorAll(".of-form")).toHaveLength(6);
  });

  it("selector click selects; single-select swaps", () => {
    const state = new FormState(nested(0));
    let node = renderForm(state, { onChange: () => {} });
    const options = node.querySelectorAll("li.of-option");
    expect(options).toHaveLength(2);
    click(options[0]);
    node = renderForm(state, { onChange: () => {} });
    expect(node.querySelectorAll(".of-chip")).toHaveLength(1);
    click(node.querySelectorAll("li.of-option")[1]);
    node = renderForm(state, { onChange: () => {} });
    const chips = [...node.querySelectorAll(".of-chip")];
    expect(chips).toHaveLength(1);
    expect(chips[0].textContent).toContain("Beta");
  });

  it("search box filters options by label", () => {
    const state = new FormState(nested(0));
    const node = renderForm(state, { onChange: () => {} });
    const search = node.querySelector("input.of-search") as HTMLInputElement;
    search.value = "alp";
    search.dispatchEvent(new Event("input", { bubbles: true }));
    const shown = [...node.querySelectorAll("li.of-option")];
    expect(shown.map((o) => o.textContent)).toEqual(["Alpha"]);
  });

  it("labels carry the IRI as tooltip", () => {
    const node = renderForm(new FormState(nested(0)), { onChange: () => {} });
    const label = node.querySelector("label.of-label") as HTMLElement;
    expect(label.title).toBe(NS + "pick");
    const option = node.querySelector("li.of-option") as HTMLElement;
    expect(option.title).toBe(NS + "a");
  });
});

describe("admin views", () => {
  it("class tree renders recursively and reports clicks", () => {
    const tree: ClassTreeNode = {
      iri: "owl:Thing", label: "Thing",
      children: [{
        iri: NS + "A", label: "A",
        children: [{ iri: NS + "B", label: "B", children: [] }],
      }],
    };
    const picked: string[] = [];
    const node = renderClassTree(tree, (iri) => picked.push(iri));
    const buttons = node.querySelectorAll("button.of-tree-node");
    expect([...buttons].map((b) => b.textContent)).toEqual(["Thing", "A", "B"]);
    click(buttons[2]);
    expect(picked).toEqual([NS + "B"]);
  });

  it("properties table shows the four walkthrough columns", () => {
    const table = renderPropertiesTable([
      { iri: NS + "p", domain: "<undefined>", label: "hasFlavor",
        range: "WineFlavor", type: "Object Prop" },
    ]);
    const cells = [...table.querySelectorAll("td")].map((c) => c.textContent);
    expect(cells).toEqual(["<undefined>", "hasFlavor", "WineFlavor", "Object Prop"]);
  });
});
