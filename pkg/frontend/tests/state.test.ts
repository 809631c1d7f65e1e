import { describe, expect, it } from "vitest";

import { ConfigDraft, FormState, configsEqual } from "../src/state.js";
import type { FormStructure, Submission } from "../src/types.js";

const WINE = "http://www.w3.org/TR/2003/PR-owl-guide-20031209/wine#";
const FOOD = "http://www.w3.org/TR/2003/PR-owl-guide-20031209/food#";

function mealCourseForm(): FormStructure {
  return {
    mainClass: FOOD + "MealCourse",
    label: "MealCourse",
    subclassOptions: [],
    elements: [
      {
        kind: "field",
        property: FOOD + "caloriesPerServing",
        label: "caloriesPerServing",
        datatype: "http://www.w3.org/2001/XMLSchema#integer",
        widget: "number",
        functional: false,
      },
      {
        kind: "selector",
        property: FOOD + "hasDrink",
        label: "hasDrink",
        rangeClass: WINE + "Wine",
        multiple: true,
        options: [
          { iri: WINE + "PulignyMontrachetWhiteBurgundy",
            label: "PulignyMontrachetWhiteBurgundy" },
          { iri: WINE + "ChateauMorgonBeaujolais",
            label: "ChateauMorgonBeaujolais" },
        ],
      },
      {
        kind: "selector",
        property: WINE + "hasBody",
        label: "hasBody",
        rangeClass: WINE + "WineBody",
        multiple: false,
        options: [
          { iri: WINE + "Light", label: "Light" },
          { iri: WINE + "Full", label: "Full" },
        ],
      },
    ],
  };
}

function mealForm(): FormStructure {
  return {
    mainClass: FOOD + "Meal",
    label: "Meal",
    subclassOptions: [{ iri: FOOD + "WineBasedMeal", label: "WineBasedMeal" }],
    elements: [
      {
        kind: "section",
        property: FOOD + "course",
        label: "course",
        rangeClass: FOOD + "MealCourse",
        form: mealCourseForm(),
      },
      {
        kind: "selector",
        property: WINE + "locatedIn",
        label: "locatedIn",
        rangeClass: WINE + "Region",
        multiple: true,
        options: [{ iri: WINE + "FrenchRegion", label: "FrenchRegion" }],
      },
    ],
  };
}

describe("FormState", () => {
  it("starts clean and empty", () => {
    const state = new FormState(mealForm());
    expect(state.dirty()).toBe(false);
    expect(state.buildSubmission()).toEqual({
      chosenClass: FOOD + "Meal",
      values: [],
    });
  });

  it("builds a nested submission from section creations", () => {
    const state = new FormState(mealForm());
    const creation = state.addCreation(FOOD + "course");
    creation.toggleSelection(FOOD + "hasDrink",
                             WINE + "PulignyMontrachetWhiteBurgundy");
    creation.setFieldValues(FOOD + "caloriesPerServing", ["400"]);
    state.toggleSelection(WINE + "locatedIn", WINE + "FrenchRegion");

    expect(state.buildSubmission()).toEqual({
      chosenClass: FOOD + "Meal",
      values: [
        {
          property: FOOD + "course",
          creations: [{
            chosenClass: FOOD + "MealCourse",
            values: [
              { property: FOOD + "caloriesPerServing",
                literals: [{ value: "400" }] },
              { property: FOOD + "hasDrink",
                individuals: [WINE + "PulignyMontrachetWhiteBurgundy"] },
            ],
          }],
        },
        { property: WINE + "locatedIn",
          individuals: [WINE + "FrenchRegion"] },
      ],
    });
    expect(state.dirty()).toBe(true);
  });

  it("nested section state exists only after choosing create", () => {
    const state = new FormState(mealForm());
    const course = state.state(FOOD + "course");
    expect(course.kind === "section" && course.creations.length).toBe(0);
    state.addCreation(FOOD + "course");
    expect(course.kind === "section" && course.creations.length).toBe(1);
    state.removeCreation(FOOD + "course", 0);
    expect(course.kind === "section" && course.creations.length).toBe(0);
  });

  it("single-select selectors replace instead of accumulating", () => {
    const state = new FormState(mealCourseForm());
    state.toggleSelection(WINE + "hasBody", WINE + "Light");
    state.toggleSelection(WINE + "hasBody", WINE + "Full");
    const body = state.state(WINE + "hasBody");
    expect(body.kind === "selector" && body.selected).toEqual([WINE + "Full"]);
    expect(state.validate()).toEqual([]);
  });

  it("deselects on second toggle", () => {
    const state = new FormState(mealCourseForm());
    state.toggleSelection(FOOD + "hasDrink", WINE + "ChateauMorgonBeaujolais");
    state.toggleSelection(FOOD + "hasDrink", WINE + "ChateauMorgonBeaujolais");
    const drink = state.state(FOOD + "hasDrink");
    expect(drink.kind === "selector" && drink.selected).toEqual([]);
  });

  it("flags functional violations before submit", () => {
    const state = new FormState(mealCourseForm());
    const body = state.state(WINE + "hasBody");
    if (body.kind === "selector") body.selected = [WINE + "Light", WINE + "Full"];
    const violations = state.validate();
    expect(violations).toHaveLength(1);
    expect(violations[0].property).toBe(WINE + "hasBody");
    expect(() => state.buildSubmission()).toThrow(/single selection/);
  });

  it("tracks dirty flags per element path", () => {
    const state = new FormState(mealForm());
    const creation = state.addCreation(FOOD + "course");
    creation.toggleSelection(FOOD + "hasDrink", WINE + "ChateauMorgonBeaujolais");
    const flags = state.dirtyFlags();
    expect(flags.has(FOOD + "course")).toBe(true);
    expect(flags.has(`${FOOD}course/0/${FOOD}hasDrink`)).toBe(true);
  });

  it("round-trips a server submission through load and build", () => {
    const submission: Submission = {
      chosenClass: FOOD + "Meal",
      values: [
        {
          property: FOOD + "course",
          creations: [{
            chosenClass: FOOD + "MealCourse",
            values: [
              { property: FOOD + "hasDrink",
                individuals: [WINE + "PulignyMontrachetWhiteBurgundy"] },
            ],
          }],
        },
      ],
    };
    const state = new FormState(mealForm());
    state.loadSubmission(submission);
    expect(state.dirty()).toBe(false);
    expect(state.buildSubmission()).toEqual(submission);
  });
});

describe("ConfigDraft", () => {
  it("starts saved and tracks edits", () => {
    const draft = new ConfigDraft(
      { hiddenProperties: [], inlinePairs: [], labelOverrides: {} });
    expect(draft.unsaved()).toBe(false);
    draft.hide(WINE + "hasMaker");
    expect(draft.unsaved()).toBe(true);
    draft.markSaved(draft.toWire());
    expect(draft.unsaved()).toBe(false);
  });

  it("wire form is order-insensitive", () => {
    const draft = new ConfigDraft(
      { hiddenProperties: [], inlinePairs: [], labelOverrides: {} });
    draft.addInlinePair(FOOD + "Meal", FOOD + "MealCourse");
    draft.addInlinePair(FOOD + "Meal", FOOD + "MealCourse");
    expect(draft.toWire().inlinePairs).toHaveLength(1);
    expect(configsEqual(draft.toWire(), {
      hiddenProperties: [],
      inlinePairs: [
        { contextClass: FOOD + "Meal", rangeClass: FOOD + "MealCourse" }],
      labelOverrides: {},
    })).toBe(true);
  });

  it("removes pairs and overrides", () => {
    const draft = new ConfigDraft({
      hiddenProperties: [WINE + "hasMaker"],
      inlinePairs: [
        { contextClass: FOOD + "Meal", rangeClass: FOOD + "MealCourse" }],
      labelOverrides: { [FOOD + "course"]: "Course" },
    });
    draft.unhide(WINE + "hasMaker");
    draft.removeInlinePair(FOOD + "Meal", FOOD + "MealCourse");
    draft.setLabelOverride(FOOD + "course", "");
    expect(draft.toWire()).toEqual(
      { hiddenProperties: [], inlinePairs: [], labelOverrides: {} });
  });
});
