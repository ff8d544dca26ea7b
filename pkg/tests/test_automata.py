import random

import pytest
from hypothesis import given, settings

from desobs.automata import (
    EPSILON,
    Finiteness,
    Generator,
    ValidationError,
    accessible_part,
    chars,
    delta_star,
    enumerate_language,
    find_marked_not_generated,
    format_string,
    generates,
    is_acyclic,
    language_difference,
    longest_string_length,
    mark_all_states,
    marks,
    oracle_of,
    parallel_compose,
    prefix_closure_generator,
    tokens,
)
from oracles import bfs_language, closure, proj, random_acyclic_generator
from strategies import small_generator


def two_path_plant():
    return Generator(
        states={"0", "1", "2", "3", "4"},
        alphabet={"a", "b", "c"},
        transitions={("0", "a"): "1", ("0", "b"): "2", ("1", "c"): "3", ("2", "c"): "4"},
        initial="0",
        marked={"3", "4"},
    )


def test_tokens_and_chars():
    assert tokens("a b  c") == ("a", "b", "c")
    assert tokens("") == EPSILON
    assert chars("abc") == ("a", "b", "c")
    assert format_string(()) == "ε"
    assert format_string(("a", "b")) == "a b"


def test_generator_validation():
    with pytest.raises(ValidationError):
        Generator(states={"0"}, alphabet={"a"}, transitions={}, initial="9", marked=set())
    with pytest.raises(ValidationError):
        Generator(states={"0"}, alphabet={"a"}, transitions={}, initial="0", marked={"9"})
    with pytest.raises(ValidationError):
        Generator(states={"0"}, alphabet={"a"}, transitions={("0", "z"): "0"}, initial="0", marked=set())
    with pytest.raises(ValidationError):
        Generator(states={"0"}, alphabet={"a"}, transitions={("0", "a"): "9"}, initial="0", marked=set())


def test_delta_star_walks_paths():
    g = two_path_plant()
    assert delta_star(g, "0", ("a", "c")) == "3"
    assert delta_star(g, "0", ()) == "0"
    assert delta_star(g, "0", ("c",)) is None
    assert delta_star(g, "0", ("a", "a")) is None
    with pytest.raises(ValidationError):
        delta_star(g, "0", ("z",))
    with pytest.raises(ValidationError):
        delta_star(g, "missing", ("a",))


def test_generates_and_marks():
    g = two_path_plant()
    assert generates(g, ("a",))
    assert generates(g, ())
    assert not generates(g, ("c",))
    assert marks(g, ("a", "c"))
    assert not marks(g, ("a",))


def test_enumerate_language_matches_reference():
    rng = random.Random(5)
    for _ in range(25):
        g = random_acyclic_generator(rng)
        n = longest_string_length(g)
        assert enumerate_language(g, n) == bfs_language(g, n)
        assert enumerate_language(g, n, which="marked") == bfs_language(g, n, marked_only=True)


def test_enumerate_language_bounded_on_cycles():
    g = Generator(
        states={"0"}, alphabet={"a"}, transitions={("0", "a"): "0"}, initial="0", marked={"0"}
    )
    assert enumerate_language(g, 3) == {(), ("a",), ("a", "a"), ("a", "a", "a")}
    assert not is_acyclic(g)
    with pytest.raises(ValidationError):
        longest_string_length(g)


def test_accessible_part_drops_unreachable():
    g = Generator(
        states={"0", "1", "9"},
        alphabet={"a"},
        transitions={("0", "a"): "1", ("9", "a"): "0"},
        initial="0",
        marked={"1", "9"},
    )
    trimmed = accessible_part(g)
    assert trimmed.states == frozenset({"0", "1"})
    assert ("9", "a") not in trimmed.transitions
    assert trimmed.marked == frozenset({"1"})


def test_is_acyclic_and_longest():
    g = two_path_plant()
    assert is_acyclic(g)
    assert longest_string_length(g) == 2


def test_mark_all_states():
    g = two_path_plant()
    m = mark_all_states(g)
    assert m.marked == m.states
    assert enumerate_language(m, 2, which="marked") == enumerate_language(g, 2)


def test_parallel_compose_shared_alphabet_intersects():
    g = two_path_plant()
    k = Generator(
        states={"0", "1", "3"},
        alphabet={"a", "b", "c"},
        transitions={("0", "a"): "1", ("1", "c"): "3"},
        initial="0",
        marked={"3"},
    )
    c = parallel_compose(g, k)
    assert enumerate_language(c, 3) == enumerate_language(g, 3) & enumerate_language(k, 3)
    assert enumerate_language(c, 3, which="marked") == {("a", "c")}


def test_parallel_compose_interleaves_private_events():
    left = Generator(
        states={"0", "1"}, alphabet={"a"}, transitions={("0", "a"): "1"}, initial="0", marked={"1"}
    )
    right = Generator(
        states={"0", "1"}, alphabet={"b"}, transitions={("0", "b"): "1"}, initial="0", marked={"1"}
    )
    c = parallel_compose(left, right)
    assert c.alphabet == frozenset({"a", "b"})
    # definitional check: membership is exactly "each projection lands in its language"
    lang = enumerate_language(c, 2)
    for s in [(), ("a",), ("b",), ("a", "b"), ("b", "a")]:
        assert (s in lang) == (
            proj(s, {"a"}) in {(), ("a",)} and proj(s, {"b"}) in {(), ("b",)}
        )
    assert ("a", "a") not in lang
    assert enumerate_language(c, 2, which="marked") == {("a", "b"), ("b", "a")}


def test_prefix_closure_generator_is_the_closure():
    rng = random.Random(6)
    for _ in range(25):
        g = random_acyclic_generator(rng)
        n = longest_string_length(g)
        kbar = prefix_closure_generator(g)
        marked = bfs_language(g, n, marked_only=True)
        assert enumerate_language(kbar, n) == (closure(marked) if marked else {()})
        # all states marked, except the empty-language convention state
        assert kbar.marked == (kbar.states if marked else frozenset())


def test_prefix_closure_of_empty_marked_language():
    g = Generator(
        states={"0", "1"}, alphabet={"a"}, transitions={("0", "a"): "1"}, initial="0", marked=set()
    )
    kbar = prefix_closure_generator(g)
    assert len(kbar.states) == 1
    assert kbar.marked == frozenset()
    assert enumerate_language(kbar, 4) == {()}
    assert "empty marked language" in kbar.notes


def test_oracle_of_contains_and_hints():
    g = two_path_plant()
    o = oracle_of(g, "generated")
    assert o.contains(("a", "c"))
    assert not o.contains(("c",))
    assert not o.contains(("z",))  # foreign symbols are simply not members
    assert o.finiteness_hint is Finiteness.FINITE
    assert o.max_length == 2
    assert o.enumerate_up_to(2) == bfs_language(g, 2)
    m = oracle_of(g, "marked-closure")
    assert m.contains(("a",)) and m.contains(("a", "c"))
    cyclic = Generator(
        states={"0"}, alphabet={"a"}, transitions={("0", "a"): "0"}, initial="0", marked={"0"}
    )
    assert oracle_of(cyclic, "generated").finiteness_hint is Finiteness.REGULAR_INFINITE


def test_language_difference_minimal_witness():
    g = two_path_plant()
    k = Generator(
        states={"0", "1", "3"},
        alphabet={"a", "b", "c"},
        transitions={("0", "a"): "1", ("1", "c"): "3"},
        initial="0",
        marked={"3"},
    )
    assert language_difference(g, g, "generated", "generated", "x", "y") is None
    w = language_difference(g, k, "generated", "generated", "plant", "sub")
    assert w.string == ("b",)
    assert w.present_in == "plant" and w.absent_from == "sub"


def test_find_marked_not_generated():
    g = two_path_plant()
    inside = Generator(
        states={"0", "1", "3"},
        alphabet={"a", "b", "c"},
        transitions={("0", "a"): "1", ("1", "c"): "3"},
        initial="0",
        marked={"3"},
    )
    assert find_marked_not_generated(inside, g) is None
    outside = Generator(
        states={"0", "1", "2"},
        alphabet={"a", "b", "c"},
        transitions={("0", "a"): "1", ("1", "a"): "2"},
        initial="0",
        marked={"2"},
    )
    assert find_marked_not_generated(outside, g) == ("a", "a")


@given(small_generator())
@settings(max_examples=60, deadline=None)
def test_generated_language_is_prefix_closed(g):
    lang = enumerate_language(g, 4)
    for s in lang:
        assert s[:-1] in lang or s == ()


@given(small_generator())
@settings(max_examples=60, deadline=None)
def test_marked_language_inside_generated(g):
    lang = enumerate_language(g, 4)
    assert enumerate_language(g, 4, which="marked") <= lang
