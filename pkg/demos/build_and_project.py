#!/usr/bin/env python3
"""Build a small plant, enumerate its languages, and project them.

The plant runs two jobs in either order (a then b, or b then a) and reports
completion with the high-level event h.  Only h is visible to the supervisor
and only h is exported to the high level, so the four projections all have
something to erase.
"""

from desobs.automata import (
    Generator,
    enumerate_language,
    format_string,
    longest_string_length,
)
from desobs.projections import AlphabetProfile, project_generator, projection_for

plant = Generator(
    states=frozenset({"s0", "s1", "s2", "s3", "s4"}),
    alphabet=frozenset({"a", "b", "h"}),
    transitions={
        ("s0", "a"): "s1",
        ("s0", "b"): "s2",
        ("s1", "b"): "s3",
        ("s2", "a"): "s3",
        ("s3", "h"): "s4",
    },
    initial="s0",
    marked=frozenset({"s4"}),
)

profile = AlphabetProfile(
    sigma=plant.alphabet,
    observable=frozenset({"h"}),
    controllable=frozenset({"h"}),
    high=frozenset({"h"}),
)


def show_languages():
    print("=== generated and marked languages ===")
    n = longest_string_length(plant)
    for kind in ("generated", "marked"):
        lang = sorted(enumerate_language(plant, n, kind), key=lambda s: (len(s), s))
        pretty = ", ".join(format_string(s) for s in lang)
        print(f"{kind:9s} ({len(lang)} strings): {pretty}")


def show_projections():
    print("\n=== the four projections of a b h ===")
    s = ("a", "b", "h")
    for kind in ("P", "A", "P_hi", "A_o"):
        p = projection_for(profile, kind)
        image = p(s) if kind in ("P", "A") else None
        if kind == "P_hi":
            image = p(projection_for(profile, "A")(s))
        if kind == "A_o":
            image = p(projection_for(profile, "P")(s))
        print(f"{kind:4s}: {format_string(image)}")
    # the diagram commutes: abstract-then-observe equals observe-then-abstract
    a, p = projection_for(profile, "A"), projection_for(profile, "P")
    p_hi, a_o = projection_for(profile, "P_hi"), projection_for(profile, "A_o")
    assert p_hi(a(s)) == a_o(p(s))
    print("P_hi(A(s)) == A_o(P(s)) checked")


def show_projected_generator():
    print("\n=== plant as seen through each alphabet ===")
    for kind, label in (("P", "observer view"), ("A", "high-level view")):
        image = project_generator(plant, profile, kind)
        n = longest_string_length(image)
        lang = sorted(enumerate_language(image, n), key=lambda s: (len(s), s))
        pretty = ", ".join(format_string(s) for s in lang)
        print(f"{label} ({kind}): states {len(image.states)}, language {pretty}")


if __name__ == "__main__":
    show_languages()
    show_projections()
    show_projected_generator()
