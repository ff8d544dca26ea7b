"""Observation consistency of a language with respect to its abstraction,
local observation consistency, and the harness relating high- and low-level
observability.

Observation consistency (OC) asks: whenever two abstracted strings t, t' of
A(L) look alike through the high-level observation P_hi, they are realized by
two strings of L that already look alike through the low-level observation P.
Local observation consistency (LOC) asks for matching low-level continuations
toward a shared controllable high-level event.  Both are checked against a
language oracle with honest bounded semantics: on infinite languages the
checkers report INCONCLUSIVE at their bounds instead of guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .automata import (
    EventString,
    Finiteness,
    Generator,
    LanguageOracle,
    Status,
    ValidationError,
    Verdict,
    format_string,
    is_acyclic,
    mark_all_states,
    oracle_of,
    parallel_compose,
    find_marked_not_generated,
)
from .projections import AlphabetProfile, projection_for, project_generator
from .supervisory import check_observability, check_sync_nonconflicting


@dataclass(frozen=True)
class OcWitnessRequest:
    """Pair of abstracted strings whose joint realization is sought."""

    t: EventString
    t_prime: EventString


@dataclass(frozen=True)
class OcWitness:
    """Strings of L realizing the requested abstractions with equal observations."""

    s: EventString
    s_prime: EventString


@dataclass(frozen=True)
class OcViolation:
    """Abstraction pair with equal high-level observations but provably no
    jointly observable realization."""

    t: EventString
    t_prime: EventString


@dataclass(frozen=True)
class LocWitness:
    """Continuations u, u' with equal observations carrying s and s_prime to
    the shared controllable high-level event."""

    s: EventString
    s_prime: EventString
    event: str
    u: EventString
    u_prime: EventString


@dataclass(frozen=True)
class LocViolation:
    """Observation-equivalent pair with no matching continuations to the event."""

    s: EventString
    s_prime: EventString
    event: str


def _len_lex(s: EventString) -> tuple[int, EventString]:
    return (len(s), s)


def _pair_order(pair: tuple[EventString, EventString]) -> tuple[int, tuple[EventString, EventString]]:
    return (len(pair[0]) + len(pair[1]), pair)


def _index_by(strings, proj) -> dict[EventString, list[EventString]]:
    table: dict[EventString, list[EventString]] = {}
    for s in sorted(strings, key=_len_lex):
        table.setdefault(proj(s), []).append(s)
    return table


def _search_oc_witness(
    by_abstraction: dict[EventString, list[EventString]],
    p,
    t: EventString,
    t_prime: EventString,
) -> OcWitness | None:
    candidates = by_abstraction.get(t, [])
    partners: dict[EventString, list[EventString]] = {}
    for s2 in by_abstraction.get(t_prime, []):
        partners.setdefault(p(s2), []).append(s2)
    best: tuple[tuple[int, EventString, EventString], OcWitness] | None = None
    for s in candidates:
        for s2 in partners.get(p(s), []):
            key = (len(s) + len(s2), s, s2)
            if best is None or key < best[0]:
                best = (key, OcWitness(s, s2))
    return None if best is None else best[1]


def find_oc_witness(
    l: LanguageOracle,
    profile: AlphabetProfile,
    request: OcWitnessRequest,
    s_bound: int,
) -> OcWitness | None:
    """Minimal witness (by |s| + |s_prime|, then lexicographically) realizing
    the requested abstraction pair with equal observations, searching language
    members up to s_bound.  Absence is definitive only when the oracle's
    language is finite and the bound covers its longest string.

    Raises ValidationError when the request itself is bad: high-level
    observations of t and t_prime differ, or an abstraction is not realized
    within the bound."""
    a = projection_for(profile, "A")
    p = projection_for(profile, "P")
    p_hi = projection_for(profile, "P_hi")
    if p_hi(request.t) != p_hi(request.t_prime):
        raise ValidationError("requested abstractions differ under the high-level observation")
    members = l.enumerate_up_to(s_bound)
    by_abstraction = _index_by(members, a)
    for t in (request.t, request.t_prime):
        if t not in by_abstraction:
            raise ValidationError(
                f"abstraction {format_string(t)} is not realized by any language member up to length {s_bound}"
            )
    return _search_oc_witness(by_abstraction, p, request.t, request.t_prime)


def verify_oc_witness(
    l: LanguageOracle,
    profile: AlphabetProfile,
    request: OcWitnessRequest,
    w: OcWitness,
) -> bool:
    """Re-check a witness against the definition: membership, abstraction
    images, and equal observations."""
    a = projection_for(profile, "A")
    p = projection_for(profile, "P")
    return (
        l.contains(w.s)
        and l.contains(w.s_prime)
        and a(w.s) == request.t
        and a(w.s_prime) == request.t_prime
        and p(w.s) == p(w.s_prime)
    )


def check_oc(
    l: LanguageOracle,
    profile: AlphabetProfile,
    t_bound: int = 4,
    s_bound: int = 12,
    witness_search_definitive: bool = False,
) -> Verdict:
    """Observation consistency over all abstraction pairs with |t| <= t_bound,
    witnesses searched among members up to s_bound.

    Semantics of the bounds: pairs are drawn from abstractions realized
    within s_bound; a missing witness convicts only when the witness search
    was exhaustive (finite language fully enumerated, or the caller vouches
    via witness_search_definitive); HOLDS is claimed only when additionally
    every realizable abstraction pair was examined.  Anything else is an
    honest INCONCLUSIVE at the bounds."""
    a = projection_for(profile, "A")
    p = projection_for(profile, "P")
    p_hi = projection_for(profile, "P_hi")
    members = l.enumerate_up_to(s_bound)
    inner_complete = witness_search_definitive or (
        l.finiteness_hint is Finiteness.FINITE
        and l.max_length is not None
        and s_bound >= l.max_length
    )
    by_abstraction = _index_by(members, a)
    images = sorted((t for t in by_abstraction if len(t) <= t_bound), key=_len_lex)
    longest_image = max((len(t) for t in by_abstraction), default=0)
    outer_complete = inner_complete and t_bound >= longest_image

    unresolved: list[tuple[EventString, EventString]] = []
    for t, t2 in sorted(itertools.product(images, images), key=_pair_order):
        if p_hi(t) != p_hi(t2):
            continue
        if _search_oc_witness(by_abstraction, p, t, t2) is None:
            if inner_complete:
                return Verdict.violated(
                    OcViolation(t, t2),
                    detail=(
                        f"abstractions {format_string(t)} and {format_string(t2)} share their high-level "
                        f"observation but no jointly observable realization exists"
                    ),
                )
            unresolved.append((t, t2))
    if unresolved:
        shown = ", ".join(f"({format_string(t)}, {format_string(t2)})" for t, t2 in unresolved[:4])
        more = "" if len(unresolved) <= 4 else f" and {len(unresolved) - 4} more"
        return Verdict.inconclusive(
            s_bound,
            detail=f"no witness within bounds for pairs: {shown}{more}; witness search not exhaustive",
        )
    if outer_complete:
        return Verdict.holds(detail=f"all {len(images)}^2 abstraction pairs witnessed")
    return Verdict.inconclusive(
        s_bound,
        detail="all sampled abstraction pairs witnessed, but the language was not exhausted at the bounds",
    )


def find_loc_witness(
    l: LanguageOracle,
    profile: AlphabetProfile,
    s: EventString,
    s_prime: EventString,
    event: str,
    u_bound: int,
) -> LocWitness | None:
    """Minimal continuation pair (u, u_prime) over the low-level alphabet with
    equal observations such that s·u·event and s_prime·u_prime·event are both
    in the language."""
    p = projection_for(profile, "P")
    low = sorted(profile.low)

    def continuations(base: EventString) -> list[EventString]:
        found: list[EventString] = []
        frontier: list[EventString] = [()]
        for _ in range(u_bound + 1):
            next_frontier: list[EventString] = []
            for u in frontier:
                if l.contains(base + u + (event,)):
                    found.append(u)
                for e in low:
                    ext = u + (e,)
                    if len(ext) <= u_bound and l.contains(base + ext):
                        next_frontier.append(ext)
            frontier = next_frontier
        return found

    side = continuations(s)
    partners: dict[EventString, list[EventString]] = {}
    for u2 in continuations(s_prime):
        partners.setdefault(p(u2), []).append(u2)
    best: tuple[tuple[int, EventString, EventString], LocWitness] | None = None
    for u in side:
        for u2 in partners.get(p(u), []):
            key = (len(u) + len(u2), u, u2)
            if best is None or key < best[0]:
                best = (key, LocWitness(s, s_prime, event, u, u2))
    return None if best is None else best[1]


def verify_loc_witness(l: LanguageOracle, profile: AlphabetProfile, w: LocWitness) -> bool:
    p = projection_for(profile, "P")
    low = profile.low
    return (
        set(w.u) <= low
        and set(w.u_prime) <= low
        and p(w.u) == p(w.u_prime)
        and l.contains(w.s + w.u + (w.event,))
        and l.contains(w.s_prime + w.u_prime + (w.event,))
    )


def check_loc(
    l: LanguageOracle,
    profile: AlphabetProfile,
    s_bound: int = 12,
    u_bound: int | None = None,
) -> Verdict:
    """Local observation consistency: every observation-equivalent pair of
    language members, facing a controllable high-level event feasible after
    both abstractions, admits observation-equivalent low-level continuations
    to that event.  u_bound defaults to s_bound but is an independent knob.

    Bounded semantics mirror check_oc: a missing continuation pair convicts
    only when the continuation search space was covered exhaustively."""
    if u_bound is None:
        u_bound = s_bound
    a = projection_for(profile, "A")
    p = projection_for(profile, "P")
    finite = l.finiteness_hint is Finiteness.FINITE and l.max_length is not None
    members = sorted(l.enumerate_up_to(s_bound), key=_len_lex)
    pairs_complete = finite and s_bound >= l.max_length
    abstraction_sample_bound = l.max_length if pairs_complete else s_bound + u_bound + 1
    abstractions = {a(x) for x in l.enumerate_up_to(abstraction_sample_bound)}
    events = sorted(profile.controllable & profile.high)

    by_view: dict[EventString, list[EventString]] = {}
    for s in members:
        by_view.setdefault(p(s), []).append(s)
    pairs = sorted(
        (pair for group in by_view.values() for pair in itertools.product(group, group)),
        key=_pair_order,
    )

    unresolved: list[LocViolation] = []
    for s, s2 in pairs:
        for e in events:
            if a(s) + (e,) not in abstractions or a(s2) + (e,) not in abstractions:
                continue
            if find_loc_witness(l, profile, s, s2, e, u_bound) is not None:
                continue
            u_complete = finite and u_bound >= l.max_length - min(len(s), len(s2)) - 1
            if u_complete:
                return Verdict.violated(
                    LocViolation(s, s2, e),
                    detail=(
                        f"{format_string(s)} and {format_string(s2)} look alike but admit no matching "
                        f"low-level continuations to {e}"
                    ),
                )
            unresolved.append(LocViolation(s, s2, e))
    if unresolved:
        first = unresolved[0]
        return Verdict.inconclusive(
            s_bound,
            detail=(
                f"no continuation pair within u-bound {u_bound} for "
                f"({format_string(first.s)}, {format_string(first.s_prime)}, {first.event}); search not exhaustive"
            ),
        )
    if pairs_complete and finite and u_bound >= l.max_length:
        return Verdict.holds(detail=f"all {len(pairs)} observation-equivalent pairs admit matching continuations")
    return Verdict.inconclusive(
        s_bound,
        detail="all sampled pairs admit matching continuations, but the language was not exhausted at the bounds",
    )


@dataclass(frozen=True)
class Theorem1Report:
    """Joint report: the three hypotheses (observation consistency, local
    observation consistency, synchronous nonconflictingness of the
    specification with the plant) plus observability verdicts at both levels
    and whether they agree.  The agreement flag is binding only when all
    hypotheses hold; otherwise the report is informational."""

    oc: Verdict
    loc: Verdict
    nonconflicting: Verdict
    high_level: Verdict
    low_level: Verdict
    # derived (specification, plant, profile) triples, kept so callers can
    # re-verify the observability witnesses against the systems that produced them
    high_system: tuple[Generator, Generator, AlphabetProfile] = field(repr=False)
    low_system: tuple[Generator, Generator, AlphabetProfile] = field(repr=False)

    @property
    def hypotheses_hold(self) -> bool:
        return all(
            v.status is Status.HOLDS for v in (self.oc, self.loc, self.nonconflicting)
        )

    @property
    def verdicts_agree(self) -> bool:
        return self.high_level.status == self.low_level.status


def theorem1_harness(g: Generator, k: Generator, profile: AlphabetProfile) -> Theorem1Report:
    """Check the high-level specification K (marked language of k, over the
    high-level alphabet) against the plant at both levels: observability of K
    with respect to the abstracted plant language versus observability of
    K ∥ L(G) with respect to L(G).  The plant must have a finite language
    (acyclic accessible part) so the hypotheses are decided exactly, and K
    must lie inside the abstracted plant language."""
    if profile.sigma != g.alphabet:
        raise ValidationError("profile alphabet must match the plant")
    if k.alphabet != profile.high:
        raise ValidationError("the specification must be a generator over the high-level alphabet")
    if not is_acyclic(g):
        raise ValidationError("the plant language must be finite (acyclic accessible part)")

    g_hi = project_generator(g, profile, "A")
    escape = find_marked_not_generated(k, g_hi)
    if escape is not None:
        raise ValidationError(
            f"specification leaves the abstracted plant language on {format_string(escape)}"
        )

    plant_oracle = oracle_of(g, "generated")
    exhaustive = plant_oracle.max_length if plant_oracle.max_length is not None else 0
    oc = check_oc(plant_oracle, profile, t_bound=exhaustive, s_bound=exhaustive)
    loc = check_loc(plant_oracle, profile, s_bound=exhaustive, u_bound=exhaustive)
    plant_all_marked = mark_all_states(g)
    nonconflicting = check_sync_nonconflicting(k, plant_all_marked)

    high_profile = AlphabetProfile(
        sigma=profile.high,
        observable=profile.high & profile.observable,
        controllable=profile.high & profile.controllable,
        high=profile.high,
    )
    high_level = check_observability(k, g_hi, high_profile)
    low_spec = parallel_compose(k, plant_all_marked)
    low_level = check_observability(low_spec, g, profile)
    return Theorem1Report(
        oc,
        loc,
        nonconflicting,
        high_level,
        low_level,
        high_system=(k, g_hi, high_profile),
        low_system=(low_spec, g, profile),
    )
