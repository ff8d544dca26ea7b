"""Generators (incomplete deterministic automata) and the languages they define.

A generator is a deterministic automaton whose transition function may be
partial.  Its generated language L(G) is the set of event strings it can
execute from the initial state; that set is prefix-closed by construction.
Its marked language L_m(G) is the subset of L(G) ending in a marked state.
Event strings are tuples of event tokens, the empty tuple being the empty
string.
"""

from __future__ import annotations

import enum
import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Literal

EventString = tuple[str, ...]
EPSILON: EventString = ()


class ValidationError(ValueError):
    """An input violates a documented precondition."""


def tokens(text: str) -> EventString:
    """Event string from whitespace-separated tokens: tokens("a b a") == ("a", "b", "a")."""
    return tuple(text.split())


def chars(text: str) -> EventString:
    """Event string from single-character events: chars("aba") == ("a", "b", "a")."""
    return tuple(text)


def format_string(s: EventString) -> str:
    """Human-readable rendering; the empty string prints as the empty-string symbol."""
    return " ".join(s) if s else "ε"


def check_symbols(s: Iterable[str], alphabet: frozenset[str], what: str = "string") -> None:
    for e in s:
        if e not in alphabet:
            raise ValidationError(f"{what} contains symbol {e!r} outside the alphabet")


class Finiteness(enum.Enum):
    FINITE = "finite"
    REGULAR_INFINITE = "regular-infinite"
    NONREGULAR = "nonregular"


class Status(enum.Enum):
    HOLDS = "HOLDS"
    VIOLATED = "VIOLATED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: HOLDS, VIOLATED (with a re-checkable witness), or
    INCONCLUSIVE (with the search bound that was exhausted)."""

    status: Status
    witness: Any = None
    bound: int | None = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status is Status.VIOLATED and self.witness is None:
            raise ValidationError("a VIOLATED verdict carries a witness")
        if self.status is Status.INCONCLUSIVE and self.bound is None:
            raise ValidationError("an INCONCLUSIVE verdict carries its bound")

    @classmethod
    def holds(cls, detail: str = "", witness: Any = None) -> "Verdict":
        return cls(Status.HOLDS, witness=witness, detail=detail)

    @classmethod
    def violated(cls, witness: Any, detail: str = "") -> "Verdict":
        return cls(Status.VIOLATED, witness=witness, detail=detail)

    @classmethod
    def inconclusive(cls, bound: int, detail: str = "") -> "Verdict":
        return cls(Status.INCONCLUSIVE, bound=bound, detail=detail)


@dataclass(frozen=True)
class DifferenceWitness:
    """A string in exactly one of two compared languages."""

    string: EventString
    present_in: str
    absent_from: str


@dataclass
class Generator:
    """Incomplete deterministic automaton: (states, alphabet, partial
    transition map (state, event) -> state, initial state, marked states).

    The `notes` field carries diagnostics attached by operations (for example
    when a prefix-closure request meets an empty marked language); it does not
    participate in equality.
    """

    states: frozenset[str]
    alphabet: frozenset[str]
    transitions: dict[tuple[str, str], str]
    initial: str
    marked: frozenset[str]
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        self.states = frozenset(self.states)
        self.alphabet = frozenset(self.alphabet)
        self.transitions = dict(self.transitions)
        self.marked = frozenset(self.marked)
        if self.initial not in self.states:
            raise ValidationError(f"initial state {self.initial!r} is not a state")
        if not self.marked <= self.states:
            raise ValidationError("marked states must be states")
        for (q, e), t in self.transitions.items():
            if q not in self.states or t not in self.states:
                raise ValidationError(f"transition ({q!r}, {e!r}) -> {t!r} uses an unknown state")
            if e not in self.alphabet:
                raise ValidationError(f"transition event {e!r} is not in the alphabet")


def delta_star(g: Generator, state: str, s: EventString) -> str | None:
    """Extended transition function.  Returns the reached state, or None when
    the run falls off the partial transition map (an undefined transition,
    as opposed to invalid input, which raises)."""
    if state not in g.states:
        raise ValidationError(f"unknown state {state!r}")
    check_symbols(s, g.alphabet)
    q: str | None = state
    for e in s:
        q = g.transitions.get((q, e))
        if q is None:
            return None
    return q


def generates(g: Generator, s: EventString) -> bool:
    """s in L(g)."""
    return delta_star(g, g.initial, s) is not None


def marks(g: Generator, s: EventString) -> bool:
    """s in L_m(g)."""
    q = delta_star(g, g.initial, s)
    return q is not None and q in g.marked


LanguageKind = Literal["generated", "marked"]


def enumerate_language(g: Generator, max_len: int, which: LanguageKind = "generated") -> set[EventString]:
    """All strings of the generated (or marked) language with length <= max_len."""
    if max_len < 0:
        raise ValidationError("max_len must be nonnegative")
    if which not in ("generated", "marked"):
        raise ValidationError(f"unknown language kind {which!r}")
    out: set[EventString] = set()
    events = sorted(g.alphabet)
    frontier: list[tuple[str, EventString]] = [(g.initial, EPSILON)]
    for _ in range(max_len + 1):
        next_frontier: list[tuple[str, EventString]] = []
        for q, s in frontier:
            if which == "generated" or q in g.marked:
                out.add(s)
            for e in events:
                t = g.transitions.get((q, e))
                if t is not None:
                    next_frontier.append((t, s + (e,)))
        frontier = next_frontier
    return out


def accessible_part(g: Generator) -> Generator:
    """Restriction to states reachable from the initial state."""
    reached = {g.initial}
    queue = deque([g.initial])
    while queue:
        q = queue.popleft()
        for e in g.alphabet:
            t = g.transitions.get((q, e))
            if t is not None and t not in reached:
                reached.add(t)
                queue.append(t)
    if reached == g.states:
        return g
    trans = {(q, e): t for (q, e), t in g.transitions.items() if q in reached}
    return Generator(frozenset(reached), g.alphabet, trans, g.initial, g.marked & reached, g.notes)


def is_acyclic(g: Generator) -> bool:
    """True when the accessible part has no cycle, i.e. L(g) is finite."""
    ga = accessible_part(g)
    succ: dict[str, set[str]] = {q: set() for q in ga.states}
    for (q, _), t in ga.transitions.items():
        succ[q].add(t)
    state: dict[str, int] = {}  # 1 = on stack, 2 = done

    def visit(q: str) -> bool:
        state[q] = 1
        for t in succ[q]:
            mark = state.get(t)
            if mark == 1:
                return False
            if mark is None and not visit(t):
                return False
        state[q] = 2
        return True

    return all(state.get(q) == 2 or visit(q) for q in ga.states)


def longest_string_length(g: Generator) -> int:
    """Length of the longest string in L(g); requires an acyclic accessible part."""
    ga = accessible_part(g)
    if not is_acyclic(ga):
        raise ValidationError("the generator's accessible part has a cycle; its language is infinite")
    memo: dict[str, int] = {}

    def depth(q: str) -> int:
        if q not in memo:
            memo[q] = 0  # placeholder; acyclicity rules out re-entry
            best = 0
            for e in ga.alphabet:
                t = ga.transitions.get((q, e))
                if t is not None:
                    best = max(best, 1 + depth(t))
            memo[q] = best
        return memo[q]

    return depth(ga.initial)


def mark_all_states(g: Generator) -> Generator:
    """Same structure with every state marked, so L_m = L."""
    return Generator(g.states, g.alphabet, dict(g.transitions), g.initial, g.states)


def parallel_compose(g1: Generator, g2: Generator) -> Generator:
    """Synchronous product: shared events move both components, private events
    move their owner alone.  Composite states are discovered pairs renamed to
    dense integers in breadth-first order, making the output reproducible."""
    alphabet = g1.alphabet | g2.alphabet
    events = sorted(alphabet)

    def step(p: str, q: str, e: str) -> tuple[str, str] | None:
        if e in g1.alphabet and e in g2.alphabet:
            p2, q2 = g1.transitions.get((p, e)), g2.transitions.get((q, e))
            if p2 is None or q2 is None:
                return None
            return p2, q2
        if e in g1.alphabet:
            p2 = g1.transitions.get((p, e))
            return None if p2 is None else (p2, q)
        q2 = g2.transitions.get((q, e))
        return None if q2 is None else (p, q2)

    start = (g1.initial, g2.initial)
    names: dict[tuple[str, str], str] = {start: "0"}
    order = [start]
    queue = deque([start])
    trans: dict[tuple[str, str], str] = {}
    while queue:
        pair = queue.popleft()
        for e in events:
            nxt = step(pair[0], pair[1], e)
            if nxt is None:
                continue
            if nxt not in names:
                names[nxt] = str(len(names))
                order.append(nxt)
                queue.append(nxt)
            trans[(names[pair], e)] = names[nxt]
    marked = frozenset(names[p] for p in order if p[0] in g1.marked and p[1] in g2.marked)
    return Generator(frozenset(names.values()), alphabet, trans, "0", marked)


def prefix_closure_generator(g: Generator) -> Generator:
    """Generator of the prefix closure of L_m(g): trim to states both
    accessible and co-accessible, then mark everything, so generated and
    marked languages coincide with the closure.

    When L_m(g) is empty the closure is empty too; no generator can generate
    a language without the empty string, so the result is the single-state
    unmarked generator (L = {ε}, L_m = ∅) flagged with a note."""
    ga = accessible_part(g)
    pred: dict[str, set[str]] = {q: set() for q in ga.states}
    for (q, _), t in ga.transitions.items():
        pred[t].add(q)
    keep = set(ga.marked)
    queue = deque(keep)
    while queue:
        q = queue.popleft()
        for p in pred[q]:
            if p not in keep:
                keep.add(p)
                queue.append(p)
    if ga.initial not in keep:
        return Generator(
            frozenset({ga.initial}), g.alphabet, {}, ga.initial, frozenset(),
            notes=("empty marked language",),
        )
    trans = {(q, e): t for (q, e), t in ga.transitions.items() if q in keep and t in keep}
    return Generator(frozenset(keep), g.alphabet, trans, ga.initial, frozenset(keep))


@dataclass(frozen=True)
class LanguageOracle:
    """Membership plus bounded enumeration for a prefix-closed language.

    contains is total: strings with foreign symbols are simply not members.
    enumerate_up_to(n) is exactly { s in L : |s| <= n }.  finiteness_hint
    tells checkers whether exhaustive bounds exist; max_length is the longest
    member when the language is finite (None otherwise)."""

    alphabet: frozenset[str]
    contains: Callable[[EventString], bool]
    enumerate_up_to: Callable[[int], set[EventString]]
    finiteness_hint: Finiteness
    max_length: int | None = None


OracleKind = Literal["generated", "marked-closure"]


def oracle_of(g: Generator, which: OracleKind = "generated") -> LanguageOracle:
    """Language oracle for L(g) or for the prefix closure of L_m(g)."""
    if which == "generated":
        base = accessible_part(g)
        language: LanguageKind = "generated"
    elif which == "marked-closure":
        base = prefix_closure_generator(g)
        language = "marked"
    else:
        raise ValidationError(f"unknown oracle kind {which!r}")

    member = marks if language == "marked" else generates

    def contains(s: EventString) -> bool:
        try:
            return member(base, s)
        except ValidationError:
            return False

    def enumerate_up_to(n: int) -> set[EventString]:
        return enumerate_language(base, n, language)

    if is_acyclic(base):
        return LanguageOracle(g.alphabet, contains, enumerate_up_to,
                              Finiteness.FINITE, longest_string_length(base))
    return LanguageOracle(g.alphabet, contains, enumerate_up_to, Finiteness.REGULAR_INFINITE)


def language_difference(
    g1: Generator,
    g2: Generator,
    which1: LanguageKind = "marked",
    which2: LanguageKind = "marked",
    label1: str = "left",
    label2: str = "right",
) -> DifferenceWitness | None:
    """Minimal string (shortest, then lexicographically least) in exactly one
    of the two languages, or None when they are equal.  The two generators
    may have different alphabets; symbols private to one side immediately
    drop the other side out of its language."""
    alphabet = g1.alphabet | g2.alphabet
    events = sorted(alphabet)

    def member(g: Generator, q: str | None, which: LanguageKind) -> bool:
        if q is None:
            return False
        return q in g.marked if which == "marked" else True

    def advance(g: Generator, q: str | None, e: str) -> str | None:
        if q is None:
            return None
        if e not in g.alphabet:
            return None
        return g.transitions.get((q, e))

    start = (g1.initial, g2.initial)
    seen = {start}
    frontier: deque[tuple[str | None, str | None, EventString]] = deque([(g1.initial, g2.initial, EPSILON)])
    while frontier:
        p, q, s = frontier.popleft()
        in1, in2 = member(g1, p, which1), member(g2, q, which2)
        if in1 != in2:
            present, absent = (label1, label2) if in1 else (label2, label1)
            return DifferenceWitness(s, present, absent)
        for e in events:
            p2, q2 = advance(g1, p, e), advance(g2, q, e)
            if p2 is None and q2 is None:
                continue
            key = (p2, q2)
            if key not in seen:
                seen.add(key)
                frontier.append((p2, q2, s + (e,)))
    return None


def find_marked_not_generated(k: Generator, g: Generator) -> EventString | None:
    """Minimal string marked by k but not generated by g (None when
    L_m(k) ⊆ L(g)).  Used to validate specification-inside-plant preconditions."""
    events = sorted(k.alphabet | g.alphabet)
    start = (k.initial, g.initial)
    seen = {start}
    frontier: deque[tuple[str, str | None, EventString]] = deque([(k.initial, g.initial, EPSILON)])
    while frontier:
        p, q, s = frontier.popleft()
        if p in k.marked and q is None:
            return s
        for e in events:
            if e not in k.alphabet:
                continue
            p2 = k.transitions.get((p, e))
            if p2 is None:
                continue
            q2 = None if q is None or e not in g.alphabet else g.transitions.get((q, e))
            key = (p2, q2)
            if key not in seen:
                seen.add(key)
                frontier.append((p2, q2, s + (e,)))
    return None
