"""Plain-text file formats for generators (with their alphabet profile) and
word-pair instances.

Generator format, one declaration per line, '#' starts a comment:

    alphabet a b h
    observable a b        # defaults to the whole alphabet when omitted
    controllable a        # defaults to empty
    high h                # defaults to empty
    initial q0
    marked q1 q2
    trans q0 a q1

States are declared implicitly by the lines that mention them.  Duplicate
trans lines with conflicting targets are a parse error.  Serialization emits
the lines in the order above with all token lists sorted, so equal inputs
produce byte-identical files.

Instance format:

    alphabet a b
    pair a baa

Words at the file level are concatenations of single-character base symbols;
the in-memory model is token-general.
"""

from __future__ import annotations

from .automata import Generator, ValidationError
from .pcp import PcpInstance
from .projections import AlphabetProfile


class ParseError(ValidationError):
    """Malformed input file; carries the file name and line number."""

    def __init__(self, message: str, path: str = "<input>", line: int = 0) -> None:
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def parse_generator_text(text: str, path: str = "<input>") -> tuple[Generator, AlphabetProfile]:
    """Parse the generator format; returns the generator and its profile."""
    alphabet: list[str] | None = None
    initial: str | None = None
    initial_line = 0
    subsets: dict[str, set[str]] = {"observable": set(), "controllable": set(), "high": set(), "marked": set()}
    subset_seen: set[str] = set()
    subset_lines: dict[str, int] = {}
    transitions: dict[tuple[str, str], str] = {}
    transition_lines: dict[tuple[str, str], int] = {}
    states: set[str] = set()

    for number, fields in _content_lines(text):
        keyword, args = fields[0], fields[1:]
        if keyword == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate alphabet line", path, number)
            if not args:
                raise ParseError("alphabet line needs at least one event", path, number)
            if len(set(args)) != len(args):
                raise ParseError("alphabet line repeats an event", path, number)
            alphabet = args
        elif keyword == "initial":
            if initial is not None:
                raise ParseError("duplicate initial line", path, number)
            if len(args) != 1:
                raise ParseError("initial line needs exactly one state", path, number)
            initial = args[0]
            initial_line = number
            states.add(initial)
        elif keyword in subsets:
            subset_seen.add(keyword)
            subset_lines.setdefault(keyword, number)
            subsets[keyword].update(args)
            if keyword == "marked":
                states.update(args)
        elif keyword == "trans":
            if len(args) != 3:
                raise ParseError("trans line needs: source event target", path, number)
            src, event, dst = args
            existing = transitions.get((src, event))
            if existing is not None and existing != dst:
                raise ParseError(
                    f"conflicting transitions from {src} on {event}: {existing} vs {dst}", path, number
                )
            transitions[(src, event)] = dst
            transition_lines.setdefault((src, event), number)
            states.update((src, dst))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", path, number)

    if alphabet is None:
        raise ParseError("missing alphabet line", path, 0)
    if initial is None:
        raise ParseError("missing initial line", path, 0)

    sigma = frozenset(alphabet)
    for name in ("observable", "controllable", "high"):
        extra = subsets[name] - sigma
        if extra:
            raise ParseError(
                f"{name} events {sorted(extra)} are not in the alphabet", path, subset_lines[name]
            )
    for key in sorted(transitions, key=lambda k: transition_lines[k]):
        if key[1] not in sigma:
            raise ParseError(
                f"transition event {key[1]!r} is not in the alphabet", path, transition_lines[key]
            )

    observable = frozenset(subsets["observable"]) if "observable" in subset_seen else sigma
    profile = AlphabetProfile(
        sigma=sigma,
        observable=observable,
        controllable=frozenset(subsets["controllable"]),
        high=frozenset(subsets["high"]),
    )
    try:
        generator = Generator(
            states=frozenset(states),
            alphabet=sigma,
            transitions=transitions,
            initial=initial,
            marked=frozenset(subsets["marked"]),
        )
    except ValidationError as err:
        raise ParseError(str(err), path, initial_line) from err
    return generator, profile


def serialize_generator(g: Generator, profile: AlphabetProfile | None = None) -> str:
    """Deterministic text form; an omitted profile serializes with the
    defaults (everything observable, nothing controllable or high).  Tokens
    containing whitespace or '#' cannot be written back and are rejected."""
    if profile is None:
        profile = AlphabetProfile(g.alphabet, g.alphabet, frozenset(), frozenset())
    if profile.sigma != g.alphabet:
        raise ValidationError("profile alphabet must match the generator")
    for token in g.alphabet | g.states:
        if "#" in token or not token or any(c.isspace() for c in token):
            raise ValidationError(f"token {token!r} cannot be serialized")
    lines = [
        "alphabet " + " ".join(sorted(g.alphabet)),
        ("observable " + " ".join(sorted(profile.observable))).rstrip(),
        ("controllable " + " ".join(sorted(profile.controllable))).rstrip(),
        ("high " + " ".join(sorted(profile.high))).rstrip(),
        "initial " + g.initial,
        ("marked " + " ".join(sorted(g.marked))).rstrip(),
    ]
    for (src, event), dst in sorted(g.transitions.items()):
        lines.append(f"trans {src} {event} {dst}")
    return "\n".join(lines) + "\n"


def load_generator(path: str) -> tuple[Generator, AlphabetProfile]:
    with open(path, encoding="utf-8") as handle:
        return parse_generator_text(handle.read(), path)


def parse_pcp_text(text: str, path: str = "<input>") -> PcpInstance:
    """Parse the instance format: one alphabet line of single-character
    symbols, then one pair line per word pair."""
    alphabet: list[str] | None = None
    pairs: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
    for number, fields in _content_lines(text):
        keyword, args = fields[0], fields[1:]
        if keyword == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate alphabet line", path, number)
            if not args:
                raise ParseError("alphabet line needs at least one symbol", path, number)
            for symbol in args:
                if len(symbol) != 1:
                    raise ParseError(f"base symbols are single characters, got {symbol!r}", path, number)
            alphabet = args
        elif keyword == "pair":
            if len(args) != 2:
                raise ParseError("pair line needs exactly two words", path, number)
            if alphabet is None:
                raise ParseError("pair line before the alphabet line", path, number)
            for word in args:
                stray = set(word) - set(alphabet)
                if stray:
                    raise ParseError(f"word {word!r} uses symbols {sorted(stray)} outside the alphabet", path, number)
            pairs.append((tuple(args[0]), tuple(args[1])))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", path, number)
    if alphabet is None:
        raise ParseError("missing alphabet line", path, 0)
    if not pairs:
        raise ParseError("an instance needs at least one pair line", path, 0)
    return PcpInstance(frozenset(alphabet), tuple(pairs))


def serialize_pcp(inst: PcpInstance) -> str:
    """Deterministic text form of an instance with single-character symbols."""
    for symbol in inst.base_alphabet:
        if len(symbol) != 1 or symbol == "#" or symbol.isspace():
            raise ValidationError(f"symbol {symbol!r} cannot be serialized in the single-character format")
    lines = ["alphabet " + " ".join(sorted(inst.base_alphabet))]
    for w, u in inst.pairs:
        lines.append(f"pair {''.join(w)} {''.join(u)}")
    return "\n".join(lines) + "\n"


def load_pcp(path: str) -> PcpInstance:
    with open(path, encoding="utf-8") as handle:
        return parse_pcp_text(handle.read(), path)
