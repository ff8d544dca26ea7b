#!/usr/bin/env python3
"""Survey when the high-level observability verdict can stand in for the
low-level one.

For each random plant, profile, and high-level specification, the joint
harness checks the three hypotheses (observation consistency, its local
variant, synchronous nonconflictingness) and then decides observability of
the specification against the abstracted plant and of its composition with
the plant against the plant itself.  Whenever the hypotheses hold, the two
verdicts agree; the survey tallies how often each outcome shows up and prints
one violated system in full.
"""

import random
from collections import Counter

from desobs.automata import Generator, Status, format_string
from desobs.consistency import theorem1_harness
from desobs.projections import AlphabetProfile, project_generator


def random_plant(rng):
    n = rng.randint(2, 5)
    alphabet = tuple("abc"[: rng.randint(2, 3)])
    states = [str(i) for i in range(n)]
    transitions = {}
    # edges only from lower to higher index, so the language is finite
    for i in range(n - 1):
        for e in alphabet:
            if rng.random() < 0.45:
                transitions[(states[i], e)] = states[rng.randint(i + 1, n - 1)]
    return Generator(
        states=frozenset(states),
        alphabet=frozenset(alphabet),
        transitions=transitions,
        initial=states[0],
        marked=frozenset({states[n - 1]}),
    )


def random_hidden_high_profile(rng, alphabet):
    # high-level events invisible to the observer, the interesting regime
    high = frozenset(e for e in alphabet if rng.random() < 0.5)
    return AlphabetProfile(
        sigma=alphabet,
        observable=frozenset(e for e in alphabet - high if rng.random() < 0.6),
        controllable=frozenset(e for e in alphabet if rng.random() < 0.5),
        high=high,
    )


def random_spec(rng, g_hi):
    transitions = {key: dst for key, dst in g_hi.transitions.items() if rng.random() < 0.8}
    return Generator(
        states=g_hi.states,
        alphabet=g_hi.alphabet,
        transitions=transitions,
        initial=g_hi.initial,
        marked=frozenset(s for s in g_hi.states if rng.random() < 0.5),
    )


def survey(target=300, seed=7):
    rng = random.Random(seed)
    outcomes = Counter()
    attempts = 0
    example = None
    held = 0
    while held < target:
        attempts += 1
        g = random_plant(rng)
        profile = random_hidden_high_profile(rng, g.alphabet)
        if not profile.high:
            continue
        k = random_spec(rng, project_generator(g, profile, "A"))
        report = theorem1_harness(g, k, profile)
        if not report.hypotheses_hold:
            outcomes["hypotheses failed"] += 1
            continue
        held += 1
        assert report.verdicts_agree, "equivalence must hold under the hypotheses"
        outcomes[f"both {report.high_level.status.name}"] += 1
        if example is None and report.high_level.status is Status.VIOLATED:
            example = (g, k, profile, report)

    print(f"=== {attempts} sampled systems, {held} satisfied the hypotheses ===")
    for label, count in outcomes.most_common():
        print(f"{label:18s}: {count}")
    if example is None:
        print("no violated system sampled; rerun with another seed to see one")
        return
    g, k, profile, report = example
    print("\n=== one system violated at both levels ===")
    print(f"plant: {len(g.states)} states over {{{', '.join(sorted(g.alphabet))}}}")
    print(f"high alphabet {{{', '.join(sorted(profile.high))}}}, "
          f"observable {{{', '.join(sorted(profile.observable))}}}")
    w = report.high_level.witness
    print(f"high-level witness: ({format_string(w.s)}, {format_string(w.s_prime)}, {w.event})")
    w = report.low_level.witness
    print(f"low-level witness:  ({format_string(w.s)}, {format_string(w.s_prime)}, {w.event})")


if __name__ == "__main__":
    survey()
