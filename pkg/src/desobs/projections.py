"""Natural projections between event alphabets, and their action on strings
and generators.

An alphabet profile fixes one global event set together with its observable,
controllable, and high-level subsets.  Four standard projections arise from a
profile:

    P     : Σ* → Σ_o*                 erase unobservable events
    A     : Σ* → Σ_hi*                erase low-level events (the abstraction)
    P_hi  : Σ_hi* → (Σ_hi ∩ Σ_o)*     observation inside the high level
    A_o   : Σ_o* → (Σ_hi ∩ Σ_o)*      abstraction of the observed string

They commute: P_hi ∘ A = A_o ∘ P, both erasing everything outside Σ_hi ∩ Σ_o.
check_diagram exercises that law on explicit samples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .automata import (
    EPSILON,
    EventString,
    Generator,
    ValidationError,
    Verdict,
    accessible_part,
    check_symbols,
)


@dataclass(frozen=True)
class AlphabetProfile:
    """Global alphabet with its observable, controllable, and high-level
    subsets.  The uncontrollable set is derived, never stored."""

    sigma: frozenset[str]
    observable: frozenset[str]
    controllable: frozenset[str]
    high: frozenset[str]

    def __post_init__(self) -> None:
        for name in ("sigma", "observable", "controllable", "high"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        for name in ("observable", "controllable", "high"):
            extra = getattr(self, name) - self.sigma
            if extra:
                raise ValidationError(f"{name} events {sorted(extra)} are outside the alphabet")

    @property
    def uncontrollable(self) -> frozenset[str]:
        return self.sigma - self.controllable

    @property
    def low(self) -> frozenset[str]:
        return self.sigma - self.high


@dataclass(frozen=True)
class NaturalProjection:
    """Homomorphism Σ_source* → Σ_target* erasing symbols outside the target."""

    source: frozenset[str]
    target: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "source", frozenset(self.source))
        object.__setattr__(self, "target", frozenset(self.target))
        if not self.target <= self.source:
            raise ValidationError("projection target must be a subset of its source")

    def __call__(self, s: EventString) -> EventString:
        check_symbols(s, self.source)
        return tuple(e for e in s if e in self.target)

    @property
    def erased(self) -> frozenset[str]:
        return self.source - self.target


PROJECTION_KINDS = ("P", "A", "P_hi", "A_o")

ProjectionKind = Union[str, NaturalProjection]


def projection_for(profile: AlphabetProfile, kind: ProjectionKind) -> NaturalProjection:
    """Resolve one of the four named projections, or pass a custom
    NaturalProjection through unchanged."""
    if isinstance(kind, NaturalProjection):
        return kind
    name = str(kind).replace("-", "_").lower()
    if name == "p":
        return NaturalProjection(profile.sigma, profile.observable)
    if name == "a":
        return NaturalProjection(profile.sigma, profile.high)
    if name == "p_hi":
        return NaturalProjection(profile.high, profile.high & profile.observable)
    if name == "a_o":
        return NaturalProjection(profile.observable, profile.high & profile.observable)
    raise ValidationError(f"unknown projection kind {kind!r}; expected one of {PROJECTION_KINDS} or a NaturalProjection")


def project(profile: AlphabetProfile, kind: ProjectionKind, s: EventString) -> EventString:
    """Apply a named (or custom) projection to one string."""
    return projection_for(profile, kind)(s)


def inverse_project_generator(g: Generator, profile: AlphabetProfile, kind: ProjectionKind) -> Generator:
    """Generator of the inverse image of L(g) (and of L_m(g)) under the
    projection: every erased symbol self-loops at every state."""
    proj = projection_for(profile, kind)
    if g.alphabet != proj.target:
        raise ValidationError("inverse projection needs a generator over the projection's target alphabet")
    trans = dict(g.transitions)
    for q in g.states:
        for e in proj.erased:
            trans[(q, e)] = q
    return Generator(g.states, proj.source, trans, g.initial, g.marked)


def _erase_to_nfa(
    g: Generator, erased: frozenset[str]
) -> tuple[dict[str, dict[str, set[str]]], frozenset[str]]:
    """First pass of projection: replace erased transitions by silent moves
    and eliminate them, leaving a nondeterministic table over kept events.
    Returns (table, start states)."""
    closure_memo: dict[str, frozenset[str]] = {}

    def closure(q: str) -> frozenset[str]:
        if q not in closure_memo:
            reached = {q}
            queue = deque([q])
            while queue:
                p = queue.popleft()
                for e in erased:
                    t = g.transitions.get((p, e))
                    if t is not None and t not in reached:
                        reached.add(t)
                        queue.append(t)
            closure_memo[q] = frozenset(reached)
        return closure_memo[q]

    kept = g.alphabet - erased
    table: dict[str, dict[str, set[str]]] = {q: {} for q in g.states}
    for q in g.states:
        for e in kept:
            targets: set[str] = set()
            for p in closure(q):
                t = g.transitions.get((p, e))
                if t is not None:
                    targets |= closure(t)
            if targets:
                table[q][e] = targets
    return table, closure(g.initial)


def project_generator(g: Generator, profile: AlphabetProfile, kind: ProjectionKind) -> Generator:
    """Deterministic generator of the projected language: silent-move
    elimination followed by subset construction.  The result generates
    P(L(g)) and marks P(L_m(g)); a subset state is marked iff it contains a
    marked source state.  States are renamed to dense integers in
    breadth-first order."""
    proj = projection_for(profile, kind)
    if g.alphabet != proj.source:
        raise ValidationError("projection needs a generator over the projection's source alphabet")
    ga = accessible_part(g)
    table, start = _erase_to_nfa(ga, proj.erased)
    events = sorted(proj.target)

    names: dict[frozenset[str], str] = {start: "0"}
    order = [start]
    queue = deque([start])
    trans: dict[tuple[str, str], str] = {}
    while queue:
        subset = queue.popleft()
        for e in events:
            targets: set[str] = set()
            for q in subset:
                targets |= table[q].get(e, set())
            if not targets:
                continue
            nxt = frozenset(targets)
            if nxt not in names:
                names[nxt] = str(len(names))
                order.append(nxt)
                queue.append(nxt)
            trans[(names[subset], e)] = names[nxt]
    marked = frozenset(names[sub] for sub in order if sub & ga.marked)
    return Generator(frozenset(names.values()), proj.target, trans, "0", marked)


def source_enumeration_bound(g: Generator, n: int) -> int:
    """Bound m such that every projected string of length <= n is the image
    of a source string of length <= m: a shortest witness interleaves at most
    |states| - 1 erased steps around each kept symbol, so m = n * |states|
    suffices (and the longest-path length suffices when g is acyclic)."""
    return n * max(1, len(accessible_part(g).states))


def check_diagram(profile: AlphabetProfile, strings: Iterable[EventString]) -> Verdict:
    """Verify P_hi(A(s)) == A_o(P(s)) on every sample string; VIOLATED
    carries the first failing string (samples are checked in sorted order)."""
    p = projection_for(profile, "P")
    a = projection_for(profile, "A")
    p_hi = projection_for(profile, "P_hi")
    a_o = projection_for(profile, "A_o")
    samples = sorted(set(strings), key=lambda s: (len(s), s))
    for s in samples:
        if p_hi(a(s)) != a_o(p(s)):
            return Verdict.violated(s, detail="projection diagram does not commute on this string")
    return Verdict.holds(detail=f"diagram commutes on all {len(samples)} sampled strings")
