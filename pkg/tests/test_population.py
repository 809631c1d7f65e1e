import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ontoforms import (
    FormConfig,
    Iri,
    Literal,
    OrphanRetractionConflict,
    Submission,
    Triple,
    TypeMismatchError,
    UnknownIndividualError,
    ValidationError,
    ValueEntry,
    apply_result,
    extract_model,
    generate_form,
    mint_iri,
    populate,
    prefill,
    serialize_turtle,
    update,
)
from ontoforms.fixtures import FOOD_NS, WINE_NS
from ontoforms.population import is_intermediate
from ontoforms.vocab import CREATED_AS_INTERMEDIATE, RDF_TYPE, RDFS_LABEL


def wine(name):
    return Iri(WINE_NS + name)


def food(name):
    return Iri(FOOD_NS + name)


MEAL_CONFIG = FormConfig(
    hidden_properties=frozenset({wine("hasMaker"), wine("madeIntoWine"),
                                 wine("producesWine")}),
    inline_pairs=frozenset({(food("Meal"), food("MealCourse"))}))


def fig9_submission():
    return Submission(chosen_class=food("Meal"), values=(
        ValueEntry(food("course"), creations=(
            Submission(chosen_class=food("MealCourse"), values=(
                ValueEntry(food("hasDrink"),
                           individuals=(wine("PulignyMontrachetWhiteBurgundy"),)),
                ValueEntry(food("hasFood"), individuals=(food("Tuna"),)),
            )),
        )),
    ))


@pytest.fixture()
def meal_form(wine_model):
    return generate_form(wine_model, food("Meal"), MEAL_CONFIG)


def advance(model, result, config=MEAL_CONFIG):
    """Apply a population result and re-extract the model."""
    return extract_model(apply_result(model.source, result))


# -- oracle: independent triple-count walker ----------------------------------


def count_expected_triples(submission, intermediate=False):
    """1 type triple (+1 marker for intermediates, +1 label when present)
    + one triple per literal/selection + per creation its own count + link."""
    total = 1
    if intermediate:
        total += 1
    if submission.display_label is not None:
        total += 1
    for entry in submission.values:
        total += len(entry.literals) + len(entry.individuals)
        for creation in entry.creations:
            total += 1 + count_expected_triples(creation, intermediate=True)
    return total


# -- populate -------------------------------------------------------------------


class TestPopulate:
    def test_walkthrough_submission(self, wine_model, meal_form):
        result = populate(wine_model, meal_form, fig9_submission())
        minted = dict(result.minted)
        assert minted[result.root_iri] == food("Meal")
        assert len(result.minted) == 2
        intermediate = next(iri for iri, cls in result.minted
                            if cls == food("MealCourse"))
        assert Triple(result.root_iri, food("course"), intermediate) \
            in result.added_triples
        assert Triple(intermediate, food("hasDrink"),
                      wine("PulignyMontrachetWhiteBurgundy")) in result.added_triples
        assert Triple(intermediate, food("hasFood"), food("Tuna")) \
            in result.added_triples
        assert Triple(intermediate, Iri(CREATED_AS_INTERMEDIATE),
                      Literal("true", datatype=Iri(
                          "http://www.w3.org/2001/XMLSchema#boolean"))) \
            in result.added_triples

    def test_minimal_insert(self, wine_model, meal_form):
        result = populate(wine_model, meal_form,
                          Submission(chosen_class=food("Meal")))
        assert len(result.minted) == 1
        assert result.added_triples == {
            Triple(result.root_iri, Iri(RDF_TYPE), food("Meal"))}

    def test_display_label_asserted(self, wine_model, meal_form):
        result = populate(wine_model, meal_form,
                          Submission(chosen_class=food("Meal"),
                                     display_label="Dinner"))
        assert Triple(result.root_iri, Iri(RDFS_LABEL), Literal("Dinner")) \
            in result.added_triples

    def test_subclass_choice_allowed(self, wine_model, meal_form):
        result = populate(wine_model, meal_form,
                          Submission(chosen_class=food("WineBasedMeal")))
        assert dict(result.minted)[result.root_iri] == food("WineBasedMeal")

    def test_illegal_chosen_class(self, wine_model, meal_form):
        with pytest.raises(ValidationError):
            populate(wine_model, meal_form,
                     Submission(chosen_class=wine("Winery")))

    def test_unknown_property(self, wine_model, meal_form):
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(food("hasDrink"), individuals=(food("Tuna"),)),))
        with pytest.raises(ValidationError) as err:
            populate(wine_model, meal_form, sub)
        assert err.value.property == food("hasDrink").value

    def test_duplicate_property(self, wine_model, meal_form):
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("locatedIn"), individuals=(wine("FrenchRegion"),)),
            ValueEntry(wine("locatedIn"), individuals=(wine("LoireRegion"),)),))
        with pytest.raises(ValidationError):
            populate(wine_model, meal_form, sub)

    def test_functional_cardinality(self, wine_model, meal_form):
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("hasBody"),
                       individuals=(wine("Light"), wine("Full"))),))
        with pytest.raises(ValidationError) as err:
            populate(wine_model, meal_form, sub)
        assert "at most one" in err.value.reason

    def test_selection_outside_range(self, wine_model, meal_form):
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("hasBody"), individuals=(food("Tuna"),)),))
        with pytest.raises(ValidationError):
            populate(wine_model, meal_form, sub)

    def test_literals_on_object_property(self, wine_model, meal_form):
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("hasBody"), literals=(Literal("Full"),)),))
        with pytest.raises(ValidationError):
            populate(wine_model, meal_form, sub)

    def test_creation_on_selector(self, wine_model, meal_form):
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("locatedIn"), creations=(
                Submission(chosen_class=wine("Region")),)),))
        with pytest.raises(ValidationError):
            populate(wine_model, meal_form, sub)

    def test_nothing_written_on_error(self, wine_model, meal_form):
        before = serialize_turtle(wine_model.source)
        with pytest.raises(ValidationError):
            populate(wine_model, meal_form,
                     Submission(chosen_class=food("Meal"), values=(
                         ValueEntry(wine("hasBody"),
                                    individuals=(wine("Light"), wine("Full"))),)))
        assert serialize_turtle(wine_model.source) == before

    def test_no_blank_nodes(self, wine_model, meal_form):
        result = populate(wine_model, meal_form, fig9_submission())
        for t in result.added_triples:
            assert isinstance(t.subject, Iri)
            assert isinstance(t.object, (Iri, Literal))

    def test_field_values_typed_by_field(self, wine_model):
        form = generate_form(wine_model, food("MealCourse"))
        sub = Submission(chosen_class=food("MealCourse"), values=(
            ValueEntry(food("caloriesPerServing"), literals=(Literal("420"),)),))
        result = populate(wine_model, form, sub)
        [t] = [t for t in result.added_triples
               if t.predicate == food("caloriesPerServing")]
        assert t.object.datatype.value.endswith("integer")

    @pytest.mark.parametrize("prop,value", [
        ("caloriesPerServing", "lots"),
        ("caloriesPerServing", "4.5"),
        ("isVegetarian", "yes"),
    ])
    def test_lexical_validation(self, wine_model, prop, value):
        form = generate_form(wine_model, food("MealCourse"))
        sub = Submission(chosen_class=food("MealCourse"), values=(
            ValueEntry(food(prop), literals=(Literal(value),)),))
        with pytest.raises(ValidationError):
            populate(wine_model, form, sub)

    def test_date_validation(self, wine_model):
        form = generate_form(wine_model, wine("Wine"))
        bad = Submission(chosen_class=wine("Wine"), values=(
            ValueEntry(wine("vintageDate"), literals=(Literal("not-a-date"),)),))
        with pytest.raises(ValidationError):
            populate(wine_model, form, bad)
        good = Submission(chosen_class=wine("Wine"), values=(
            ValueEntry(wine("vintageDate"), literals=(Literal("1998-07-14"),)),))
        populate(wine_model, form, good)


class TestMintIri:
    def test_counter_starts_at_one(self, wine_model):
        assert mint_iri(wine_model, food("MealCourse")).value == \
            FOOD_NS + "MealCourse_1"

    def test_counter_increments_after_insert(self, wine_model, meal_form):
        result = populate(wine_model, meal_form, fig9_submission())
        model = advance(wine_model, result)
        assert mint_iri(model, food("MealCourse")).value == FOOD_NS + "MealCourse_2"

    def test_sanitization(self, wine_model):
        # keep [A-Za-z0-9_]; everything else becomes '_'
        assert "My Meal!".translate(str.maketrans({" ": "_", "!": "_"})) == "My_Meal_"
        assert mint_iri(wine_model, food("Meal"), "My Meal!").value == \
            FOOD_NS + "My_Meal__1"

    def test_session_minting_is_collision_free(self, wine_model, meal_form):
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(food("course"), creations=(
                Submission(chosen_class=food("MealCourse")),
                Submission(chosen_class=food("MealCourse")),
            )),))
        result = populate(wine_model, meal_form, sub)
        course_iris = [iri for iri, cls in result.minted
                       if cls == food("MealCourse")]
        assert len(set(course_iris)) == 2


# -- triple-count oracle over random submissions --------------------------------

_labels = st.one_of(st.none(), st.text(
    alphabet="abcdefghij XYZ!", min_size=1, max_size=10))


@st.composite
def _meal_submissions(draw):
    regions = [wine("FrenchRegion"), wine("CaliforniaRegion"),
               wine("BordeauxRegion"), wine("LoireRegion")]
    drinks = [wine("PulignyMontrachetWhiteBurgundy"),
              wine("ChateauMorgonBeaujolais")]
    foods = [food("Tuna"), food("Halibut")]
    bodies = [wine("Light"), wine("Medium"), wine("Full")]
    values = []
    if draw(st.booleans()):
        values.append(ValueEntry(wine("locatedIn"), individuals=tuple(
            draw(st.sets(st.sampled_from(regions), max_size=3)))))
    if draw(st.booleans()):
        values.append(ValueEntry(wine("hasBody"), individuals=tuple(
            draw(st.sets(st.sampled_from(bodies), max_size=1)))))
    creations = []
    for _ in range(draw(st.integers(0, 2))):
        inner = []
        if draw(st.booleans()):
            inner.append(ValueEntry(food("hasDrink"), individuals=tuple(
                draw(st.sets(st.sampled_from(drinks), max_size=2)))))
        if draw(st.booleans()):
            inner.append(ValueEntry(food("hasFood"), individuals=tuple(
                draw(st.sets(st.sampled_from(foods), max_size=2)))))
        if draw(st.booleans()):
            inner.append(ValueEntry(food("caloriesPerServing"),
                                    literals=(Literal(str(draw(st.integers(0, 900)))),)))
        creations.append(Submission(
            chosen_class=food("MealCourse"),
            display_label=draw(_labels),
            values=tuple(inner)))
    if creations:
        values.append(ValueEntry(food("course"), creations=tuple(creations)))
    return Submission(chosen_class=food("Meal"),
                      display_label=draw(_labels),
                      values=tuple(values))


@settings(max_examples=80, deadline=None)
@given(submission=_meal_submissions())
def test_triple_count_matches_walker(wine_model, submission):
    form = generate_form(wine_model, food("Meal"), MEAL_CONFIG)
    result = populate(wine_model, form, submission)
    assert len(result.added_triples) == count_expected_triples(submission)


# -- prefill ---------------------------------------------------------------------


class TestPrefill:
    def test_roundtrip_of_walkthrough(self, wine_model, meal_form):
        result = populate(wine_model, meal_form, fig9_submission())
        model = advance(wine_model, result)
        form = generate_form(model, food("Meal"), MEAL_CONFIG)
        back = prefill(model, form, result.root_iri)
        assert back.chosen_class == food("Meal")
        [course_entry] = [e for e in back.values if e.property == food("course")]
        assert course_entry.individuals == ()
        [creation] = course_entry.creations
        assert creation.chosen_class == food("MealCourse")
        got = {e.property: e.individuals for e in creation.values}
        assert got == {
            food("hasDrink"): (wine("PulignyMontrachetWhiteBurgundy"),),
            food("hasFood"): (food("Tuna"),),
        }

    def test_intermediates_stay_invisible(self, wine_model, meal_form):
        result = populate(wine_model, meal_form, fig9_submission())
        model = advance(wine_model, result)
        form = generate_form(model, food("Meal"), MEAL_CONFIG)
        back = prefill(model, form, result.root_iri)
        minted_intermediates = {iri for iri, cls in result.minted
                                if iri != result.root_iri}

        def named_iris(sub):
            for entry in sub.values:
                yield from entry.individuals
                for c in entry.creations:
                    yield from named_iris(c)

        assert minted_intermediates.isdisjoint(set(named_iris(back)))

    def test_no_assertions_empty_values(self, wine_model, meal_form):
        result = populate(wine_model, meal_form,
                          Submission(chosen_class=food("Meal")))
        model = advance(wine_model, result)
        form = generate_form(model, food("Meal"), MEAL_CONFIG)
        assert prefill(model, form, result.root_iri).values == ()

    def test_existing_individual(self, wine_model):
        form = generate_form(wine_model, wine("Wine"))
        back = prefill(wine_model, form, wine("PulignyMontrachetWhiteBurgundy"))
        assert back.chosen_class == wine("WhiteBurgundy")
        got = {e.property: e for e in back.values}
        assert got[wine("hasBody")].individuals == (wine("Medium"),)
        assert got[wine("alcoholPercentage")].literals[0].lexical == "13.5"

    def test_unknown_individual(self, wine_model, meal_form):
        with pytest.raises(UnknownIndividualError):
            prefill(wine_model, meal_form, food("Nobody"))

    def test_type_mismatch(self, wine_model, meal_form):
        with pytest.raises(TypeMismatchError):
            prefill(wine_model, meal_form, food("Tuna"))


# -- update ----------------------------------------------------------------------


class TestUpdate:
    def _populated(self, wine_model):
        result = populate(
            wine_model,
            generate_form(wine_model, food("Meal"), MEAL_CONFIG),
            fig9_submission())
        model = advance(wine_model, result)
        form = generate_form(model, food("Meal"), MEAL_CONFIG)
        return model, form, result

    def test_fixed_point(self, wine_model):
        model, form, result = self._populated(wine_model)
        back = prefill(model, form, result.root_iri)
        delta = update(model, form, result.root_iri, back)
        assert delta.added_triples == frozenset()
        assert delta.removed_triples == frozenset()
        assert delta.minted == ()
        after = apply_result(model.source, delta)
        assert serialize_turtle(after) == serialize_turtle(model.source)

    def test_adding_one_selection(self, wine_model):
        model, form, result = self._populated(wine_model)
        back = prefill(model, form, result.root_iri)
        [course] = [e for e in back.values if e.property == food("course")]
        [creation] = course.creations
        inner = {e.property: e for e in creation.values}
        foods = inner[food("hasFood")].individuals + (food("Halibut"),)
        new_creation = Submission(
            chosen_class=creation.chosen_class,
            values=(inner[food("hasDrink")],
                    ValueEntry(food("hasFood"), individuals=foods)))
        # replacing the creation's content retracts and re-mints it
        new_sub = Submission(chosen_class=back.chosen_class, values=(
            ValueEntry(food("course"), creations=(new_creation,)),))
        delta = update(model, form, result.root_iri, new_sub)
        assert len(delta.minted) == 1
        old_intermediate = next(iri for iri, cls in result.minted
                                if cls == food("MealCourse"))
        assert all(t.subject != old_intermediate or t in delta.removed_triples
                   for t in model.source.triples(subject=old_intermediate))

    def test_selector_diff_is_minimal(self, wine_model):
        model, form, result = self._populated(wine_model)
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("locatedIn"), individuals=(wine("FrenchRegion"),)),))
        first = update(model, form, result.root_iri, sub)
        assert len(first.added_triples) == 1 and not first.removed_triples
        model2 = extract_model(apply_result(model.source, first))
        form2 = generate_form(model2, food("Meal"), MEAL_CONFIG)
        wider = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("locatedIn"),
                       individuals=(wine("FrenchRegion"), wine("LoireRegion"))),))
        second = update(model2, form2, result.root_iri, wider)
        assert len(second.added_triples) == 1
        assert not second.removed_triples

    def test_replacing_creation_retracts_old(self, wine_model):
        model, form, result = self._populated(wine_model)
        old_intermediate = next(iri for iri, cls in result.minted
                                if cls == food("MealCourse"))
        replacement = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(food("course"), creations=(
                Submission(chosen_class=food("MealCourse"), values=(
                    ValueEntry(food("hasFood"), individuals=(food("Halibut"),)),)),)),))
        delta = update(model, form, result.root_iri, replacement)
        assert len(delta.minted) == 1
        new_intermediate = delta.minted[0][0]
        assert new_intermediate != old_intermediate
        removed_subjects = {t.subject for t in delta.removed_triples}
        assert old_intermediate in removed_subjects
        old_triples = set(model.source.triples(subject=old_intermediate))
        assert old_triples <= delta.removed_triples
        after = apply_result(model.source, delta)
        assert not any(True for _ in after.triples(subject=old_intermediate))
        assert Triple(result.root_iri, food("course"), new_intermediate) in after

    def test_untouched_properties_survive(self, wine_model):
        model, form, result = self._populated(wine_model)
        sub = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(wine("hasBody"), individuals=(wine("Full"),)),))
        delta = update(model, form, result.root_iri, sub)
        after = apply_result(model.source, delta)
        intermediate = next(iri for iri, cls in result.minted
                            if cls == food("MealCourse"))
        assert Triple(result.root_iri, food("course"), intermediate) in after

    def test_orphan_conflict(self, wine_model):
        model, form, result = self._populated(wine_model)
        intermediate = next(iri for iri, cls in result.minted
                            if cls == food("MealCourse"))
        # an outside subject now references the intermediate
        tampered = model.source.copy()
        tampered.add(Triple(wine("Bancroft"), wine("producesWine"), intermediate))
        model2 = extract_model(tampered)
        form2 = generate_form(model2, food("Meal"), MEAL_CONFIG)
        replacement = Submission(chosen_class=food("Meal"), values=(
            ValueEntry(food("course"), creations=()),))
        with pytest.raises(OrphanRetractionConflict):
            update(model2, form2, result.root_iri, replacement)

    def test_retype_rejected(self, wine_model):
        model, form, result = self._populated(wine_model)
        with pytest.raises(TypeMismatchError):
            update(model, form, result.root_iri,
                   Submission(chosen_class=food("WineBasedMeal")))

    def test_label_replacement(self, wine_model, meal_form):
        result = populate(wine_model, meal_form,
                          Submission(chosen_class=food("Meal"),
                                     display_label="First"))
        model = advance(wine_model, result)
        form = generate_form(model, food("Meal"), MEAL_CONFIG)
        delta = update(model, form, result.root_iri,
                       Submission(chosen_class=food("Meal"),
                                  display_label="Second"))
        assert Triple(result.root_iri, Iri(RDFS_LABEL), Literal("First")) \
            in delta.removed_triples
        assert Triple(result.root_iri, Iri(RDFS_LABEL), Literal("Second")) \
            in delta.added_triples
