"""Reduction from the Post correspondence problem to observation consistency.

An instance is a finite list of word pairs (w_i, u_i) over a base alphabet.
From it we build a prefix-closed, nonregular language over the base alphabet
extended with index events i1..in and three markers:

    members  @ i_1 … i_m $ reverse(w_{i_1} … w_{i_m}) @        (m >= 1)
    and      i_1 … i_m $ reverse(u_{i_1} … u_{i_m}) #          (m >= 1)

With the markers @ and # high-level and unobservable, the separator $ also
unobservable, and the base letters and index events observable and low-level,
every abstracted string observes to the empty string, so observation
consistency must pair up all four abstractions {ε, @, @@, #}.
Realizations of @@ and # with equal observations force a common index
sequence whose w- and u-concatenations agree, i.e. a solution of the
instance.  A bounded solver therefore certifies consistency up to a bound,
and the critical pair (@@, #) is exactly as hard as the instance itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .automata import (
    EventString,
    Finiteness,
    LanguageOracle,
    ValidationError,
    Verdict,
    format_string,
)
from .consistency import OcWitness, OcWitnessRequest, verify_oc_witness
from .projections import AlphabetProfile

AT = "@"
HASH = "#"
DOLLAR = "$"
RESERVED = frozenset({AT, HASH, DOLLAR})

CRITICAL_PAIR: tuple[EventString, EventString] = ((AT, AT), (HASH,))


def index_event(i: int) -> str:
    """Event token for pair number i (1-based).  Tokens are "i1", "i2", ...,
    never bare digits, so more than nine pairs stay unambiguous."""
    return f"i{i}"


@dataclass(frozen=True)
class PcpInstance:
    """Word pairs (w_i, u_i) over a base alphabet.  Words are event strings;
    the base alphabet must avoid the reserved markers and the index events."""

    base_alphabet: frozenset[str]
    pairs: tuple[tuple[EventString, EventString], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base_alphabet", frozenset(self.base_alphabet))
        object.__setattr__(
            self, "pairs", tuple((tuple(w), tuple(u)) for w, u in self.pairs)
        )

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def index_events(self) -> tuple[str, ...]:
        return tuple(index_event(i) for i in range(1, self.size + 1))


@dataclass(frozen=True)
class PcpValidation:
    status: Literal["ok", "trivially-solvable", "invalid"]
    index: int | None = None
    reason: str | None = None


def validate(inst: PcpInstance) -> PcpValidation:
    """Well-formedness triage: INVALID with a reason, TRIVIALLY_SOLVABLE with
    the first index whose words coincide, or OK."""
    if inst.size == 0:
        return PcpValidation("invalid", reason="an instance needs at least one pair")
    clash = inst.base_alphabet & RESERVED
    if clash:
        return PcpValidation("invalid", reason=f"base alphabet uses reserved symbols {sorted(clash)}")
    clash = inst.base_alphabet & set(inst.index_events)
    if clash:
        return PcpValidation("invalid", reason=f"base alphabet collides with index events {sorted(clash)}")
    for i, (w, u) in enumerate(inst.pairs, start=1):
        if not w or not u:
            return PcpValidation("invalid", reason=f"pair {i} has an empty word")
        stray = (set(w) | set(u)) - inst.base_alphabet
        if stray:
            return PcpValidation("invalid", reason=f"pair {i} uses symbols {sorted(stray)} outside the base alphabet")
    for i, (w, u) in enumerate(inst.pairs, start=1):
        if w == u:
            return PcpValidation("trivially-solvable", index=i)
    return PcpValidation("ok")


IndexSequence = tuple[int, ...]


def concatenations(inst: PcpInstance, seq: IndexSequence) -> tuple[EventString, EventString]:
    """The two concatenations (w-side, u-side) spelled by an index sequence."""
    for i in seq:
        if not 1 <= i <= inst.size:
            raise ValidationError(f"index {i} out of range 1..{inst.size}")
    w = tuple(itertools.chain.from_iterable(inst.pairs[i - 1][0] for i in seq))
    u = tuple(itertools.chain.from_iterable(inst.pairs[i - 1][1] for i in seq))
    return w, u


def is_solution(inst: PcpInstance, seq: IndexSequence) -> bool:
    """Nonempty index sequence whose two concatenations coincide."""
    if not seq:
        return False
    w, u = concatenations(inst, seq)
    return w == u


def solve_bounded(inst: PcpInstance, k_max: int) -> IndexSequence | None:
    """Breadth-first search for a solution with at most k_max indices,
    pruning branches where neither concatenation is a prefix of the other.
    Returns the shortest solution, lexicographically least among the
    shortest, or None when no solution exists within the bound."""
    v = validate(inst)
    if v.status == "invalid":
        raise ValidationError(f"invalid instance: {v.reason}")
    if k_max < 1:
        return None
    # configuration: the surplus of the longer side; equal prefixes cancel
    seen: set[tuple[str, EventString]] = set()
    frontier: list[tuple[IndexSequence, str, EventString]] = [((), "w", ())]
    for _ in range(k_max):
        next_frontier: list[tuple[IndexSequence, str, EventString]] = []
        for seq, side, surplus in frontier:
            for i in range(1, inst.size + 1):
                w, u = inst.pairs[i - 1]
                ahead, behind = (surplus + w, u) if side == "w" else (w, surplus + u)
                if ahead[: len(behind)] == behind[: len(ahead)]:
                    new_seq = seq + (i,)
                    if len(ahead) == len(behind):
                        return new_seq
                    if len(ahead) > len(behind):
                        config = ("w", ahead[len(behind):])
                    else:
                        config = ("u", behind[len(ahead):])
                    if config not in seen:
                        seen.add(config)
                        next_frontier.append((new_seq, config[0], config[1]))
        frontier = next_frontier
    return None


def reduction_alphabet(inst: PcpInstance) -> frozenset[str]:
    return inst.base_alphabet | RESERVED | set(inst.index_events)


def reduction_profile(inst: PcpInstance) -> AlphabetProfile:
    """Alphabet profile of the reduction: the markers @ and # are the (whole)
    high level and are unobservable; base symbols and index events are
    observable; nothing is controllable."""
    sigma = reduction_alphabet(inst)
    return AlphabetProfile(
        sigma=sigma,
        observable=inst.base_alphabet | set(inst.index_events),
        controllable=frozenset(),
        high=frozenset({AT, HASH}),
    )


def _member_prefix(
    inst: PcpInstance,
    x: EventString,
    words: int,
    leading_at: bool,
    terminal: str,
) -> bool:
    """Is x a prefix of a member of the chosen branch?  words selects the
    w-side (0) or u-side (1); the branch fixes the leading @ and the final
    marker.  The index run commits the member once $ is read."""
    pos = 0
    if leading_at:
        if not x:
            return True
        if x[0] != AT:
            return False
        pos = 1
    index_set = set(inst.index_events)
    seq: list[int] = []
    while pos < len(x) and x[pos] in index_set:
        seq.append(int(x[pos][1:]))
        pos += 1
    if pos == len(x):
        return True
    if x[pos] != DOLLAR or not seq:
        return False
    pos += 1
    spelled = tuple(
        itertools.chain.from_iterable(inst.pairs[i - 1][words] for i in seq)
    )
    tail = tuple(reversed(spelled)) + (terminal,)
    rest = x[pos:]
    return len(rest) <= len(tail) and tail[: len(rest)] == rest


def build_reduction_oracle(inst: PcpInstance) -> LanguageOracle:
    """Oracle for the prefix closure of the reduction language.  Membership
    is decided by parsing against the two branch shapes; enumeration walks
    the grammar of prefixes (index runs, then committed tails) instead of
    filtering arbitrary strings."""
    v = validate(inst)
    if v.status == "invalid":
        raise ValidationError(f"invalid instance: {v.reason}")
    sigma = reduction_alphabet(inst)

    def contains(x: EventString) -> bool:
        if not x:
            return True
        if x[0] == AT:
            return _member_prefix(inst, x, words=0, leading_at=True, terminal=AT)
        return _member_prefix(inst, x, words=1, leading_at=False, terminal=HASH)

    def enumerate_up_to(n: int) -> set[EventString]:
        if n < 0:
            raise ValidationError("enumeration bound must be nonnegative")
        out: set[EventString] = {()}
        for words, leading_at, terminal in ((0, True, AT), (1, False, HASH)):
            head_base: EventString = (AT,) if leading_at else ()
            if leading_at and len(head_base) <= n:
                out.add(head_base)
            max_run = n - len(head_base)
            for j in range(1, max_run + 1):
                for seq in itertools.product(range(1, inst.size + 1), repeat=j):
                    head = head_base + tuple(index_event(i) for i in seq)
                    out.add(head)
                    if len(head) + 1 > n:
                        continue
                    committed = head + (DOLLAR,)
                    out.add(committed)
                    spelled = tuple(
                        itertools.chain.from_iterable(inst.pairs[i - 1][words] for i in seq)
                    )
                    tail = tuple(reversed(spelled)) + (terminal,)
                    room = n - len(committed)
                    for t in range(1, min(len(tail), room) + 1):
                        out.add(committed + tail[:t])
        return out

    return LanguageOracle(sigma, contains, enumerate_up_to, Finiteness.NONREGULAR)


def abstraction_image(inst: PcpInstance, length_bound: int) -> frozenset[EventString]:
    """The set { A(x) : x in the closure, |x| <= length_bound } computed from
    the member shapes: only the markers survive abstraction, so the image is
    a subset of {ε, @, @@, #}, and each element is realized exactly when the
    shortest string of its shape fits the bound (a w-branch member needs
    4 + min |w_i| symbols, a u-branch member 3 + min |u_i|)."""
    v = validate(inst)
    if v.status == "invalid":
        raise ValidationError(f"invalid instance: {v.reason}")
    image: set[EventString] = set()
    if length_bound >= 0:
        image.add(())
    if length_bound >= 1:
        image.add((AT,))
    if length_bound >= 4 + min(len(w) for w, _ in inst.pairs):
        image.add((AT, AT))
    if length_bound >= 3 + min(len(u) for _, u in inst.pairs):
        image.add((HASH,))
    return frozenset(image)


def _w_member(inst: PcpInstance, seq: IndexSequence) -> EventString:
    w, _ = concatenations(inst, seq)
    return (AT,) + tuple(index_event(i) for i in seq) + (DOLLAR,) + tuple(reversed(w)) + (AT,)


def _u_member(inst: PcpInstance, seq: IndexSequence) -> EventString:
    _, u = concatenations(inst, seq)
    return tuple(index_event(i) for i in seq) + (DOLLAR,) + tuple(reversed(u)) + (HASH,)


def abstraction_pair_witnesses(
    inst: PcpInstance, sol: IndexSequence
) -> list[tuple[EventString, EventString, OcWitness]]:
    """Witnesses for all six unordered pairs of distinct abstractions,
    following the canonical constructions: the pairs touching only one
    marker reuse the first word pair, the pairs crossing the two branches
    are built from the given solution.  Every witness is re-verified against
    the oracle and the projections before being returned."""
    if not is_solution(inst, sol):
        raise ValidationError(f"{sol} is not a solution of the instance")
    oracle = build_reduction_oracle(inst)
    profile = reduction_profile(inst)

    w1 = inst.pairs[0][0]
    u1 = inst.pairs[0][1]
    first_w = (AT, index_event(1), DOLLAR) + tuple(reversed(w1))
    # complete u-branch member over the first pair; the branch spells u-words
    first_u = (index_event(1), DOLLAR) + tuple(reversed(u1))

    w_full = _w_member(inst, sol)          # @ indices $ reversed-concat @
    w_open = w_full[:-1]                   # missing the final @
    u_full = _u_member(inst, sol)          # indices $ reversed-concat #
    u_open = u_full[:-1]                   # missing the final #

    cases: list[tuple[EventString, EventString, OcWitness]] = [
        ((AT,), (AT, AT), OcWitness(first_w, first_w + (AT,))),
        ((AT,), (HASH,), OcWitness(w_open, u_full)),
        ((AT,), (), OcWitness(w_open, u_open)),
        ((AT, AT), (HASH,), OcWitness(w_full, u_full)),
        ((AT, AT), (), OcWitness(w_full, u_open)),
        ((HASH,), (), OcWitness(first_u + (HASH,), first_u)),
    ]
    for t, t2, witness in cases:
        if not verify_oc_witness(oracle, profile, OcWitnessRequest(t, t2), witness):
            raise ValidationError(
                f"internal witness for pair ({format_string(t)}, {format_string(t2)}) failed re-verification"
            )
    return cases


@dataclass(frozen=True)
class CriticalSearch:
    """Outcome of the direct witness search for the pair (@@, #): the witness
    and its index sequence when found, plus every index sequence rejected on
    the way (each decodes to a non-solution)."""

    witness: OcWitness | None
    sequence: IndexSequence | None
    rejected: tuple[IndexSequence, ...]


def find_critical_witness(inst: PcpInstance, k_max: int) -> CriticalSearch:
    """Direct search over the oracle for strings realizing (@@, #) with equal
    observations, trying index sequences in order of length then
    lexicographically.  Equal observations force the candidate pair to share
    its index run and letters, so for each sequence the only candidate
    partner is the u-branch string spelling the w-side letters; membership of
    that candidate is exactly the solution property.  This is a second,
    independent route to solve_bounded."""
    v = validate(inst)
    if v.status == "invalid":
        raise ValidationError(f"invalid instance: {v.reason}")
    oracle = build_reduction_oracle(inst)
    rejected: list[IndexSequence] = []
    for length in range(1, k_max + 1):
        for seq in itertools.product(range(1, inst.size + 1), repeat=length):
            s = _w_member(inst, seq)
            w, _ = concatenations(inst, seq)
            candidate = tuple(index_event(i) for i in seq) + (DOLLAR,) + tuple(reversed(w)) + (HASH,)
            if oracle.contains(candidate):
                return CriticalSearch(OcWitness(s, candidate), seq, tuple(rejected))
            rejected.append(seq)
    return CriticalSearch(None, None, tuple(rejected))


def decode_critical_witness(inst: PcpInstance, w: OcWitness) -> IndexSequence:
    """Extract the index sequence of a (@@, #) witness and re-verify that it
    solves the instance; the witness structure forces this."""
    oracle = build_reduction_oracle(inst)
    profile = reduction_profile(inst)
    if not verify_oc_witness(oracle, profile, OcWitnessRequest(*CRITICAL_PAIR), w):
        raise ValidationError("not a valid witness for the critical pair")
    index_set = set(inst.index_events)
    seq = tuple(int(e[1:]) for e in itertools.takewhile(lambda e: e in index_set, w.s[1:]))
    if not is_solution(inst, seq):
        raise ValidationError(f"witness decodes to {seq}, which does not solve the instance")
    return seq


def check_oc_reduction(inst: PcpInstance, k_max: int) -> Verdict:
    """Observation consistency of the reduction language, decided through the
    instance: a bounded solution yields witnesses for all six abstraction
    pairs (HOLDS); exhausting the bound leaves the critical pair (@@, #)
    unresolved, which is honest INCONCLUSIVE since consistency of the
    reduction is exactly solvability of the instance."""
    v = validate(inst)
    if v.status == "invalid":
        raise ValidationError(f"invalid instance: {v.reason}")
    sol = solve_bounded(inst, k_max)
    if sol is not None:
        witnesses = abstraction_pair_witnesses(inst, sol)
        trivia = " (trivially solvable)" if v.status == "trivially-solvable" else ""
        return Verdict.holds(
            witness=witnesses,
            detail=(
                f"solution {list(sol)}{trivia} realizes every abstraction pair, "
                f"including the critical pair ({format_string(CRITICAL_PAIR[0])}, {format_string(CRITICAL_PAIR[1])})"
            ),
        )
    return Verdict.inconclusive(
        k_max,
        detail=(
            f"no solution with at most {k_max} indices; the critical pair "
            f"({format_string(CRITICAL_PAIR[0])}, {format_string(CRITICAL_PAIR[1])}) stays unresolved, "
            f"and resolving it is equivalent to solving the instance"
        ),
    )
