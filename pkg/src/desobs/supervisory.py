"""Supervisory-control checks: controllability, marked-language closedness,
observability, and synchronous nonconflictingness.

Specifications K are handed over as generators and always read through their
marked language; the prefix closure used by every definition is derived
internally, never trusted from the caller.  Membership of a string s in the
closure K̄ is "the closure generator reaches a marked state on s", which also
covers the empty-specification edge case (the closure generator of an empty
marked language has a single unmarked state, so nothing is in K̄).
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass

from .automata import (
    EPSILON,
    EventString,
    Finiteness,
    Generator,
    LanguageOracle,
    ValidationError,
    Verdict,
    DifferenceWitness,
    find_marked_not_generated,
    format_string,
    generates,
    language_difference,
    marks,
    parallel_compose,
    prefix_closure_generator,
)
from .projections import AlphabetProfile, projection_for


@dataclass(frozen=True)
class ControllabilityWitness:
    """s in K̄ whose uncontrollable continuation s·event leaves K̄ inside L(G)."""

    s: EventString
    event: str


@dataclass(frozen=True)
class ObservabilityWitness:
    """Observation-equivalent pair (s, s_prime) on which the controllable
    event disambiguates incorrectly: s·event stays in the plant and s_prime
    allows it in K̄, yet s·event leaves K̄."""

    s: EventString
    s_prime: EventString
    event: str


def _require_same_alphabet(k: Generator, g: Generator, profile: AlphabetProfile) -> None:
    if k.alphabet != g.alphabet:
        raise ValidationError("specification and plant must share one alphabet")
    if profile.sigma != g.alphabet:
        raise ValidationError("profile alphabet must match the generators")


def _in_closure(kbar: Generator, q: str | None) -> bool:
    return q is not None and q in kbar.marked


def check_controllability(k: Generator, g: Generator, profile: AlphabetProfile) -> Verdict:
    """K̄ Σ_u ∩ L(G) ⊆ K̄, decided exactly on the product of the closure
    generator with the plant.  VIOLATED carries a minimal (shortest, then
    lexicographically least) witness (s, event)."""
    _require_same_alphabet(k, g, profile)
    kbar = prefix_closure_generator(k)
    events = sorted(profile.sigma)
    uncontrollable = sorted(profile.uncontrollable)

    if not _in_closure(kbar, kbar.initial):
        return Verdict.holds(detail="empty specification is vacuously controllable")

    start = (kbar.initial, g.initial)
    seen = {start}
    frontier: deque[tuple[str, str, EventString]] = deque([(kbar.initial, g.initial, EPSILON)])
    while frontier:
        x, y, s = frontier.popleft()
        for u in uncontrollable:
            if (y, u) in g.transitions and not _in_closure(kbar, kbar.transitions.get((x, u))):
                return Verdict.violated(
                    ControllabilityWitness(s, u),
                    detail=f"{format_string(s + (u,))} stays in the plant but leaves the specification closure",
                )
        for e in events:
            x2, y2 = kbar.transitions.get((x, e)), g.transitions.get((y, e))
            if x2 is None or y2 is None or not _in_closure(kbar, x2):
                continue
            if (x2, y2) not in seen:
                seen.add((x2, y2))
                frontier.append((x2, y2, s + (e,)))
    return Verdict.holds(detail="no uncontrollable escape from the specification closure")


def check_lm_closed(k: Generator, g: Generator, profile: AlphabetProfile) -> Verdict:
    """K = K̄ ∩ L_m(G), compared exactly; the witness is a minimal string in
    the symmetric difference."""
    _require_same_alphabet(k, g, profile)
    kbar = prefix_closure_generator(k)
    events = sorted(profile.sigma)

    def advance(gen: Generator, q: str | None, e: str) -> str | None:
        return None if q is None else gen.transitions.get((q, e))

    start = (k.initial, kbar.initial, g.initial)
    seen = {start}
    frontier: deque[tuple[str | None, str | None, str | None, EventString]] = deque(
        [(k.initial, kbar.initial, g.initial, EPSILON)]
    )
    while frontier:
        a, b, c, s = frontier.popleft()
        in_k = a is not None and a in k.marked
        in_both = _in_closure(kbar, b) and c is not None and c in g.marked
        if in_k != in_both:
            present, absent = ("K", "K̄ ∩ L_m(G)") if in_k else ("K̄ ∩ L_m(G)", "K")
            return Verdict.violated(
                DifferenceWitness(s, present, absent),
                detail=f"{format_string(s)} is in {present} but not in {absent}",
            )
        for e in events:
            nxt = (advance(k, a, e), advance(kbar, b, e), advance(g, c, e))
            if nxt == (None, None, None):
                continue
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((*nxt, s + (e,)))
    return Verdict.holds(detail="the specification equals its closure intersected with the marked plant language")


def check_observability(k: Generator, g: Generator, profile: AlphabetProfile) -> Verdict:
    """Observability of K (marked language of k) with respect to L(G), the
    observable set, and the controllable set, decided exactly by a pair
    construction: pairs of plant runs reachable by observation-equivalent
    strings are explored alongside their status inside the specification
    closure.  VIOLATED carries a witness (s, s_prime, event) minimal in
    |s| + |s_prime| with lexicographic tie-break."""
    _require_same_alphabet(k, g, profile)
    escape = find_marked_not_generated(k, g)
    if escape is not None:
        raise ValidationError(
            f"specification is not inside the plant: {format_string(escape)} is marked but not generated"
        )
    kbar = prefix_closure_generator(k)
    events = sorted(profile.sigma)
    controllable = sorted(profile.controllable)
    observable = profile.observable

    def adv(x: str | None, e: str) -> str | None:
        return None if x is None else kbar.transitions.get((x, e))

    start = (kbar.initial, g.initial, kbar.initial, g.initial)
    heap: list[tuple[int, EventString, EventString, int, tuple]] = [(0, EPSILON, EPSILON, 0, start)]
    counter = itertools.count(1)
    seen: set[tuple] = set()
    while heap:
        _, s, s2, _, state = heapq.heappop(heap)
        if state in seen:
            continue
        seen.add(state)
        x1, y1, x2, y2 = state
        for e in controllable:
            se_in_plant = (y1, e) in g.transitions
            s_in_kbar = _in_closure(kbar, x1)
            s2e_in_kbar = _in_closure(kbar, adv(x2, e))
            se_in_kbar = _in_closure(kbar, adv(x1, e))
            if se_in_plant and s_in_kbar and s2e_in_kbar and not se_in_kbar:
                return Verdict.violated(
                    ObservabilityWitness(s, s2, e),
                    detail=(
                        f"strings {format_string(s)} and {format_string(s2)} look alike after projection "
                        f"yet disagree on extending with {e}"
                    ),
                )
        for e in events:
            if e in observable:
                z1, z2 = g.transitions.get((y1, e)), g.transitions.get((y2, e))
                if z1 is not None and z2 is not None:
                    nxt = (adv(x1, e), z1, adv(x2, e), z2)
                    if nxt not in seen:
                        heapq.heappush(heap, (len(s) + len(s2) + 2, s + (e,), s2 + (e,), next(counter), nxt))
            else:
                z1 = g.transitions.get((y1, e))
                if z1 is not None:
                    nxt = (adv(x1, e), z1, x2, y2)
                    if nxt not in seen:
                        heapq.heappush(heap, (len(s) + len(s2) + 1, s + (e,), s2, next(counter), nxt))
                z2 = g.transitions.get((y2, e))
                if z2 is not None:
                    nxt = (x1, y1, adv(x2, e), z2)
                    if nxt not in seen:
                        heapq.heappush(heap, (len(s) + len(s2) + 1, s, s2 + (e,), next(counter), nxt))
    return Verdict.holds(detail="no observation-equivalent pair disagrees on a controllable extension")


def verify_observability_witness(
    k: Generator, g: Generator, profile: AlphabetProfile, w: ObservabilityWitness
) -> bool:
    """Re-check a reported observability violation against the definition."""
    kbar = prefix_closure_generator(k)
    p = projection_for(profile, "P")
    if w.event not in profile.controllable:
        return False
    if p(w.s) != p(w.s_prime):
        return False
    return (
        generates(g, w.s)
        and generates(g, w.s_prime)
        and generates(g, w.s + (w.event,))
        and marks(kbar, w.s)
        and marks(kbar, w.s_prime + (w.event,))
        and not marks(kbar, w.s + (w.event,))
    )


def verify_controllability_witness(
    k: Generator, g: Generator, profile: AlphabetProfile, w: ControllabilityWitness
) -> bool:
    """Re-check a reported controllability violation against the definition."""
    kbar = prefix_closure_generator(k)
    return (
        w.event in profile.uncontrollable
        and marks(kbar, w.s)
        and generates(g, w.s + (w.event,))
        and not marks(kbar, w.s + (w.event,))
    )


def verify_nonconflict_witness(k: Generator, g: Generator, w: DifferenceWitness) -> bool:
    """Re-check that the string separates the two sides of the
    nonconflictingness equation."""
    left = prefix_closure_generator(parallel_compose(k, g))
    right = parallel_compose(prefix_closure_generator(k), prefix_closure_generator(g))
    in_left = generates(left, w.string)
    in_right = generates(right, w.string)
    if in_left == in_right:
        return False
    present_left = w.present_in == "closure of the composition"
    return in_left == present_left


def brute_force_observability(
    k: LanguageOracle, g: LanguageOracle, profile: AlphabetProfile, bound: int
) -> Verdict:
    """Definitional scan over all observation-equivalent pairs of plant
    strings up to the bound.  k is the oracle of the specification closure K̄
    and g the oracle of L(G).  HOLDS is claimed only when the plant language
    is finite and the bound covers its longest string; otherwise a clean scan
    is INCONCLUSIVE at the bound."""
    if profile.sigma != g.alphabet:
        raise ValidationError("profile alphabet must match the plant oracle")
    p = projection_for(profile, "P")
    members = sorted(g.enumerate_up_to(bound), key=lambda s: (len(s), s))
    by_view: dict[EventString, list[EventString]] = {}
    for s in members:
        by_view.setdefault(p(s), []).append(s)
    pairs = sorted(
        (
            (s, s2)
            for group in by_view.values()
            for s, s2 in itertools.product(group, group)
        ),
        key=lambda pair: (len(pair[0]) + len(pair[1]), pair),
    )
    for s, s2 in pairs:
        for e in sorted(profile.controllable):
            if g.contains(s + (e,)) and k.contains(s) and k.contains(s2 + (e,)) and not k.contains(s + (e,)):
                return Verdict.violated(
                    ObservabilityWitness(s, s2, e),
                    detail="definitional scan found a disagreeing observation-equivalent pair",
                )
    exhaustive = g.finiteness_hint is Finiteness.FINITE and g.max_length is not None and bound >= g.max_length
    if exhaustive:
        return Verdict.holds(detail="definitional scan covered the whole finite plant language")
    return Verdict.inconclusive(bound, detail="no violation among strings up to the bound; language not exhausted")


def check_sync_nonconflicting(k: Generator, g: Generator) -> Verdict:
    """closure(K ∥ L) == closure(K) ∥ closure(L) for the two marked
    languages, decided exactly; VIOLATED carries a minimal string in the
    difference.  An empty marked language on either side closes to the
    {ε}-generator, matching the closure convention of prefix_closure_generator."""
    left = prefix_closure_generator(parallel_compose(k, g))
    right = parallel_compose(prefix_closure_generator(k), prefix_closure_generator(g))
    diff = language_difference(
        left, right, "generated", "generated",
        label1="closure of the composition", label2="composition of the closures",
    )
    if diff is None:
        return Verdict.holds(detail="composition and closure commute for these languages")
    return Verdict.violated(diff, detail=f"{format_string(diff.string)} is in the {diff.present_in} only")
