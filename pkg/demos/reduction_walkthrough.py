#!/usr/bin/env python3
"""Walk through the encoding of a word-matching puzzle as an observation
consistency question.

Given word pairs (w_i, u_i), the classic puzzle asks for a nonempty index
sequence spelling the same word through the w side and the u side.  The
encoding builds a language with one branch per side: the w branch is wrapped
in @ markers, the u branch ends in #, the separator $ and the markers are
invisible to the low-level observer, and only the markers survive at the
high level.  The abstractions @ @ and # then observe alike at the high level,
and realizations that observe alike at the low level exist exactly when the
puzzle has a solution.  A general decision procedure for observation
consistency of such languages would therefore solve every instance of an
unsolvable problem; bounded search is the honest best effort.
"""

import pathlib

from desobs.automata import format_string
from desobs.pcp import (
    CRITICAL_PAIR,
    abstraction_image,
    abstraction_pair_witnesses,
    build_reduction_oracle,
    check_oc_reduction,
    concatenations,
    find_critical_witness,
    solve_bounded,
    validate,
)
from desobs.textio import load_pcp

DATA = pathlib.Path(__file__).parent / "data"


def solve_the_instance(inst):
    print("=== the instance and its solution ===")
    for i, (w, u) in enumerate(inst.pairs, start=1):
        print(f"pair {i}: w={''.join(w)}  u={''.join(u)}")
    print(f"validation: {validate(inst).status}")
    sol = solve_bounded(inst, 6)
    w, u = concatenations(inst, sol)
    print(f"solution {' '.join(map(str, sol))} spells {''.join(w)} on both sides")
    return sol


def look_at_the_language(inst):
    print("\n=== the encoded language ===")
    oracle = build_reduction_oracle(inst)
    members = sorted(oracle.enumerate_up_to(4), key=lambda s: (len(s), s))
    print(f"{len(members)} members up to length 4, for example:")
    for s in members[:6] + members[-3:]:
        print(f"  {format_string(s)}")
    print("abstraction image by length bound:")
    for bound in (0, 1, 4, 5, 30):
        image = sorted(abstraction_image(inst, bound), key=lambda s: (len(s), s))
        pretty = ", ".join(format_string(s) for s in image)
        print(f"  length <= {bound:2d}: {{{pretty}}}")


def witness_every_pair(inst, sol):
    print("\n=== witnesses for all six abstraction pairs ===")
    for t, t2, w in abstraction_pair_witnesses(inst, sol):
        print(f"({format_string(t)}, {format_string(t2)}):")
        print(f"  realized by {format_string(w.s)}")
        print(f"  and         {format_string(w.s_prime)}")
    print("each pair verified: equal high-level observations, equal low-level observations")


def the_unsolvable_case():
    print("\n=== an unsolvable instance ===")
    inst = load_pcp(DATA / "unsolvable.pcp")
    for i, (w, u) in enumerate(inst.pairs, start=1):
        print(f"pair {i}: w={''.join(w)}  u={''.join(u)}")
    print(f"solver: no solution with up to 8 indices -> {solve_bounded(inst, 8)}")
    search = find_critical_witness(inst, 8)
    crit = f"({format_string(CRITICAL_PAIR[0])}, {format_string(CRITICAL_PAIR[1])})"
    print(f"direct search for the pair {crit}: {search.witness}")
    print(f"rejected {len(search.rejected)} candidate sequences, none a solution")
    verdict = check_oc_reduction(inst, 8)
    print(f"consistency check: {verdict.status.name}")
    print(f"  {verdict.detail}")


if __name__ == "__main__":
    instance = load_pcp(DATA / "canonical.pcp")
    solution = solve_the_instance(instance)
    look_at_the_language(instance)
    witness_every_pair(instance, solution)
    the_unsolvable_case()
