#!/usr/bin/env python3
"""Check whether a high-level view of a plant can be trusted under partial
observation.

Observation consistency asks: whenever two high-level strings look alike to
the high-level observer, can they be realized by low-level strings that look
alike to the low-level observer?  Local observation consistency asks the
matching question for single controllable high-level events.  Both checks
return re-checkable witnesses either way.
"""

from desobs.automata import Generator, Status, format_string, oracle_of
from desobs.consistency import (
    check_loc,
    check_oc,
    find_oc_witness,
    verify_oc_witness,
    OcWitnessRequest,
)
from desobs.projections import AlphabetProfile


def fmt(s):
    return format_string(s)


def consistent_plant():
    print("=== both branches raise the same high event: consistent ===")
    g = Generator(
        states=frozenset({"0", "1", "2", "3", "4"}),
        alphabet=frozenset({"a", "b", "h"}),
        transitions={("0", "a"): "1", ("0", "b"): "2", ("1", "h"): "3", ("2", "h"): "4"},
        initial="0",
        marked=frozenset({"3", "4"}),
    )
    profile = AlphabetProfile(
        sigma=g.alphabet,
        observable=frozenset({"h"}),
        controllable=frozenset({"h"}),
        high=frozenset({"h"}),
    )
    oracle = oracle_of(g, "generated")
    print(f"observation consistency:       {check_oc(oracle, profile, 2, 2).status.name}")
    print(f"local observation consistency: {check_loc(oracle, profile, s_bound=2).status.name}")
    # the witness behind the verdict: h and h again, realized by ah and bh,
    # which the low-level observer cannot tell apart either
    w = find_oc_witness(oracle, profile, OcWitnessRequest(("h",), ("h",)), s_bound=2)
    print(f"sample realization: {fmt(w.s)} and {fmt(w.s_prime)} both observe as h")
    assert verify_oc_witness(oracle, profile, OcWitnessRequest(("h",), ("h",)), w)


def inconsistent_plant():
    print("\n=== each branch raises its own high event: inconsistent ===")
    g = Generator(
        states=frozenset({"0", "1", "2", "3", "4"}),
        alphabet=frozenset({"a", "b", "g1", "g2"}),
        transitions={("0", "a"): "1", ("0", "b"): "2", ("1", "g1"): "3", ("2", "g2"): "4"},
        initial="0",
        marked=frozenset({"3", "4"}),
    )
    # the high events are invisible low-level, so g1 and g2 have the same
    # high-level observation but their realizations differ on the visible a
    profile = AlphabetProfile(
        sigma=g.alphabet,
        observable=frozenset({"a"}),
        controllable=frozenset(),
        high=frozenset({"g1", "g2"}),
    )
    oracle = oracle_of(g, "generated")
    v = check_oc(oracle, profile, 2, 2)
    print(f"observation consistency: {v.status.name}")
    t, t2 = v.witness.t, v.witness.t_prime
    print(
        f"witness: {fmt(t)} and {fmt(t2)} observe alike at the high level, but no"
        " pair of realizations observes alike at the low level"
    )


def locally_inconsistent_plant():
    print("\n=== h follows a but not b: locally inconsistent ===")
    g = Generator(
        states=frozenset({"0", "1", "2", "3"}),
        alphabet=frozenset({"a", "b", "h"}),
        transitions={("0", "a"): "1", ("0", "b"): "2", ("1", "h"): "3"},
        initial="0",
        marked=frozenset({"2", "3"}),
    )
    profile = AlphabetProfile(
        sigma=g.alphabet,
        observable=frozenset({"h"}),
        controllable=frozenset({"h"}),
        high=frozenset({"h"}),
    )
    oracle = oracle_of(g, "generated")
    v = check_loc(oracle, profile, s_bound=3)
    print(f"local observation consistency: {v.status.name}")
    w = v.witness
    print(
        f"witness: '{fmt(w.s)}' and '{fmt(w.s_prime)}' observe alike and the high"
        f" level enables {w.event} after both, but only one of them can reach it"
    )
    assert v.status is Status.VIOLATED


if __name__ == "__main__":
    consistent_plant()
    inconsistent_plant()
    locally_inconsistent_plant()
