"""Command-line interface.

Every run exits with 0 (HOLDS / true / solution found), 1 (VIOLATED / false /
no solution within the bound, where that answer is definitive), 2
(INCONCLUSIVE), or 3 (usage or parse error, with a one-line diagnostic).
Reports are available as text or JSON; JSON reports carry the verdict,
re-verified witnesses as token sequences, the bounds in effect, a timing
field, and the tool version.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Callable

from . import __version__
from .automata import (
    DifferenceWitness,
    EventString,
    Status,
    ValidationError,
    Verdict,
    chars,
    format_string,
    oracle_of,
    tokens,
)
from .consistency import (
    LocViolation,
    LocWitness,
    OcViolation,
    OcWitness,
    OcWitnessRequest,
    check_loc,
    check_oc,
    find_loc_witness,
    find_oc_witness,
    theorem1_harness,
    verify_oc_witness,
)
from .pcp import (
    CRITICAL_PAIR,
    abstraction_image,
    abstraction_pair_witnesses,
    build_reduction_oracle,
    check_oc_reduction,
    concatenations,
    is_solution,
    reduction_profile,
    solve_bounded,
    validate,
)
from .projections import PROJECTION_KINDS, project
from .supervisory import (
    ControllabilityWitness,
    ObservabilityWitness,
    check_controllability,
    check_observability,
    check_sync_nonconflicting,
    verify_controllability_witness,
    verify_nonconflict_witness,
    verify_observability_witness,
)
from .textio import ParseError, load_generator, load_pcp, serialize_generator

DEFAULT_T_BOUND = 4
DEFAULT_S_BOUND = 12
DEFAULT_K = 6

_EXIT_BY_STATUS = {Status.HOLDS: 0, Status.VIOLATED: 1, Status.INCONCLUSIVE: 2}


class CliUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliUsageError(message)


def _strings(seq: EventString) -> list[str]:
    return list(seq)


def witness_to_jsonable(w: Any) -> Any:
    """Typed witnesses rendered as plain token sequences for reports."""
    if isinstance(w, ControllabilityWitness):
        return {"kind": "controllability", "s": _strings(w.s), "event": w.event}
    if isinstance(w, ObservabilityWitness):
        return {"kind": "observability", "s": _strings(w.s), "s_prime": _strings(w.s_prime), "event": w.event}
    if isinstance(w, DifferenceWitness):
        return {
            "kind": "language-difference",
            "string": _strings(w.string),
            "present_in": w.present_in,
            "absent_from": w.absent_from,
        }
    if isinstance(w, OcWitness):
        return {"kind": "oc-witness", "s": _strings(w.s), "s_prime": _strings(w.s_prime)}
    if isinstance(w, OcViolation):
        return {"kind": "oc-unwitnessed-pair", "t": _strings(w.t), "t_prime": _strings(w.t_prime)}
    if isinstance(w, LocWitness):
        return {
            "kind": "loc-witness",
            "s": _strings(w.s),
            "s_prime": _strings(w.s_prime),
            "event": w.event,
            "u": _strings(w.u),
            "u_prime": _strings(w.u_prime),
        }
    if isinstance(w, LocViolation):
        return {"kind": "loc-violation", "s": _strings(w.s), "s_prime": _strings(w.s_prime), "event": w.event}
    if isinstance(w, tuple) and len(w) == 3 and isinstance(w[2], OcWitness):
        t, t_prime, inner = w
        return {
            "kind": "abstraction-pair-witness",
            "t": _strings(t),
            "t_prime": _strings(t_prime),
            "s": _strings(inner.s),
            "s_prime": _strings(inner.s_prime),
        }
    raise ValidationError(f"no JSON form for witness {w!r}")


def _witout(verdict: Verdict) -> list[Any]:
    if verdict.witness is None:
        return []
    if isinstance(verdict.witness, list):
        return [witness_to_jsonable(w) for w in verdict.witness]
    return [witness_to_jsonable(verdict.witness)]


def _verdict_lines(verdict: Verdict) -> list[str]:
    lines = [f"verdict: {verdict.status.value}"]
    if verdict.detail:
        lines.append(f"detail: {verdict.detail}")
    if verdict.bound is not None:
        lines.append(f"bound: {verdict.bound}")
    for entry in _witout(verdict):
        parts = ", ".join(
            f"{key}={format_string(tuple(value)) if isinstance(value, list) else value}"
            for key, value in entry.items()
            if key != "kind"
        )
        lines.append(f"witness [{entry['kind']}]: {parts}")
    return lines


def _verdict_result(verdict: Verdict, bounds: dict[str, int]) -> tuple[int, dict[str, Any], list[str]]:
    payload = {
        "verdict": verdict.status.value,
        "witnesses": _witout(verdict),
        "bounds": bounds,
        "detail": verdict.detail,
    }
    return _EXIT_BY_STATUS[verdict.status], payload, _verdict_lines(verdict)


def _reject_unverified(ok: bool, what: str) -> None:
    if not ok:
        raise ValidationError(f"internal error: {what} failed re-verification")


def _cmd_check_oc(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    g, profile = load_generator(args.lang)
    oracle = oracle_of(g, "generated")
    verdict = check_oc(oracle, profile, t_bound=args.t_bound, s_bound=args.s_bound)
    if verdict.status is Status.VIOLATED:
        w: OcViolation = verdict.witness
        _reject_unverified(
            find_oc_witness(oracle, profile, OcWitnessRequest(w.t, w.t_prime), args.s_bound) is None,
            "reported unwitnessed abstraction pair",
        )
    return _verdict_result(verdict, {"t_bound": args.t_bound, "s_bound": args.s_bound})


def _cmd_check_loc(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    g, profile = load_generator(args.lang)
    oracle = oracle_of(g, "generated")
    u_bound = args.s_bound if args.u_bound is None else args.u_bound
    verdict = check_loc(oracle, profile, s_bound=args.s_bound, u_bound=u_bound)
    if verdict.status is Status.VIOLATED:
        w: LocViolation = verdict.witness
        _reject_unverified(
            find_loc_witness(oracle, profile, w.s, w.s_prime, w.event, u_bound) is None,
            "reported missing continuation pair",
        )
    return _verdict_result(verdict, {"s_bound": args.s_bound, "u_bound": u_bound})


def _cmd_check_obs(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    k, _ = load_generator(args.spec)
    g, profile = load_generator(args.plant)
    verdict = check_observability(k, g, profile)
    if verdict.status is Status.VIOLATED:
        _reject_unverified(
            verify_observability_witness(k, g, profile, verdict.witness), "observability witness"
        )
    return _verdict_result(verdict, {})


def _cmd_check_ctrl(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    k, _ = load_generator(args.spec)
    g, profile = load_generator(args.plant)
    verdict = check_controllability(k, g, profile)
    if verdict.status is Status.VIOLATED:
        _reject_unverified(
            verify_controllability_witness(k, g, profile, verdict.witness), "controllability witness"
        )
    return _verdict_result(verdict, {})


def _cmd_check_nonconflict(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    k, _ = load_generator(args.left)
    g, _ = load_generator(args.right)
    verdict = check_sync_nonconflicting(k, g)
    if verdict.status is Status.VIOLATED:
        _reject_unverified(verify_nonconflict_witness(k, g, verdict.witness), "nonconflictingness witness")
    return _verdict_result(verdict, {})


def _cmd_project(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    _, profile = load_generator(args.gen)
    s = chars(args.string) if args.chars else tokens(args.string)
    result = project(profile, args.kind, s)
    payload = {
        "verdict": "OK",
        "witnesses": [],
        "bounds": {},
        "result": _strings(result),
    }
    return 0, payload, [format_string(result)]


def _cmd_compose(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    from .automata import parallel_compose
    from .projections import AlphabetProfile

    g1, p1 = load_generator(args.left)
    g2, p2 = load_generator(args.right)
    composed = parallel_compose(g1, g2)
    profile = AlphabetProfile(
        sigma=composed.alphabet,
        observable=p1.observable | p2.observable,
        controllable=p1.controllable | p2.controllable,
        high=p1.high | p2.high,
    )
    text = serialize_generator(composed, profile)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        lines = [f"wrote {len(composed.states)} states to {args.out}"]
    else:
        lines = [text.rstrip("\n")]
    payload = {
        "verdict": "OK",
        "witnesses": [],
        "bounds": {},
        "generator_text": text,
        "states": len(composed.states),
    }
    return 0, payload, lines


def _cmd_pcp_solve(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    inst = load_pcp(args.instance)
    sol = solve_bounded(inst, args.k)
    if sol is not None:
        _reject_unverified(is_solution(inst, sol), "bounded solution")
        w, u = concatenations(inst, sol)
        payload = {
            "verdict": "SOLUTION-FOUND",
            "witnesses": [{"kind": "index-sequence", "indices": list(sol), "spells": _strings(w)}],
            "bounds": {"k": args.k},
        }
        lines = [
            f"solution: {' '.join(str(i) for i in sol)}",
            f"both concatenations spell: {format_string(w)}",
        ]
        return 0, payload, lines
    payload = {"verdict": "NO-SOLUTION-WITHIN-BOUND", "witnesses": [], "bounds": {"k": args.k}}
    return 1, payload, [f"no solution with at most {args.k} indices"]


def _cmd_pcp_reduce(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    inst = load_pcp(args.instance)
    oracle = build_reduction_oracle(inst)
    profile = reduction_profile(inst)
    members = sorted(oracle.enumerate_up_to(args.bound), key=lambda s: (len(s), s))
    image = sorted(abstraction_image(inst, args.bound), key=lambda s: (len(s), s))
    lines = [
        f"alphabet: {' '.join(sorted(profile.sigma))}",
        f"observable: {' '.join(sorted(profile.observable))}",
        f"high: {' '.join(sorted(profile.high))}",
        "controllable: (none)",
        f"members up to length {args.bound}: {len(members)}",
        f"abstraction image up to length {args.bound}: " + ", ".join(format_string(t) for t in image),
    ]
    for s in members[: args.show]:
        lines.append(f"  {format_string(s)}")
    if len(members) > args.show:
        lines.append(f"  ... and {len(members) - args.show} more")
    payload = {
        "verdict": "OK",
        "witnesses": [],
        "bounds": {"bound": args.bound},
        "member_count": len(members),
        "abstraction_image": [_strings(t) for t in image],
        "members_shown": [_strings(s) for s in members[: args.show]],
    }
    return 0, payload, lines


def pcp_demo_pipeline(inst, k: int) -> tuple[int, dict[str, Any], list[str]]:
    """Validate, solve within the bound, build the reduction, check
    consistency, and narrate each step with re-verified evidence."""
    v = validate(inst)
    noun = "pair" if inst.size == 1 else "pairs"
    lines = [f"instance: {inst.size} {noun} over {{{', '.join(sorted(inst.base_alphabet))}}}"]
    if v.status == "invalid":
        raise ValidationError(f"invalid instance: {v.reason}")
    if v.status == "trivially-solvable":
        lines.append(f"validation: trivially solvable (pair {v.index} has equal words)")
    else:
        lines.append("validation: ok")

    sol = solve_bounded(inst, k)
    if sol is not None:
        _reject_unverified(is_solution(inst, sol), "bounded solution")
        w, _ = concatenations(inst, sol)
        lines.append(
            f"bounded search: solution {' '.join(str(i) for i in sol)} found, "
            f"both concatenations spell {format_string(w)} (re-verified)"
        )
    else:
        lines.append(f"bounded search: no solution with at most {k} indices")

    oracle = build_reduction_oracle(inst)
    profile = reduction_profile(inst)
    hidden = sorted(profile.sigma - profile.observable)
    lines.append(
        f"reduction language: alphabet of {len(profile.sigma)} events, "
        f"high level {{{', '.join(sorted(profile.high))}}}, "
        f"unobservable {{{', '.join(hidden)}}}"
    )

    verdict = check_oc_reduction(inst, k)
    witnesses = []
    if verdict.status is Status.HOLDS:
        witnesses = abstraction_pair_witnesses(inst, sol)
        for t, t_prime, witness in witnesses:
            _reject_unverified(
                verify_oc_witness(oracle, profile, OcWitnessRequest(t, t_prime), witness),
                f"witness for pair ({format_string(t)}, {format_string(t_prime)})",
            )
            lines.append(
                f"pair ({format_string(t)}, {format_string(t_prime)}): "
                f"s = {format_string(witness.s)}, s' = {format_string(witness.s_prime)} "
                f"(members, images, and observations re-verified)"
            )
        lines.append("observation consistency HOLDS (witnessed)")
        code = 0
    else:
        lines.append(
            f"no solution with at most {k} indices; observation consistency unresolved at the bound "
            f"(critical pair {format_string(CRITICAL_PAIR[0])} / {format_string(CRITICAL_PAIR[1])})"
        )
        code = 2
    payload = {
        "verdict": verdict.status.value,
        "witnesses": [witness_to_jsonable(w) for w in witnesses],
        "bounds": {"k": k},
        "detail": verdict.detail,
    }
    return code, payload, lines


def _cmd_pcp_demo(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    inst = load_pcp(args.instance)
    return pcp_demo_pipeline(inst, args.k)


def _cmd_theorem1(args: argparse.Namespace) -> tuple[int, dict[str, Any], list[str]]:
    g, profile = load_generator(args.plant)
    k, _ = load_generator(args.spec)
    report = theorem1_harness(g, k, profile)
    if report.high_level.status is Status.VIOLATED:
        spec_hi, plant_hi, profile_hi = report.high_system
        _reject_unverified(
            verify_observability_witness(spec_hi, plant_hi, profile_hi, report.high_level.witness),
            "high-level observability witness",
        )
    if report.low_level.status is Status.VIOLATED:
        spec_lo, plant_lo, profile_lo = report.low_system
        _reject_unverified(
            verify_observability_witness(spec_lo, plant_lo, profile_lo, report.low_level.witness),
            "low-level observability witness",
        )
    lines = [
        f"observation consistency: {report.oc.status.value}",
        f"local observation consistency: {report.loc.status.value}",
        f"synchronously nonconflicting: {report.nonconflicting.status.value}",
        f"hypotheses hold: {'yes' if report.hypotheses_hold else 'no'}",
        f"high-level observability: {report.high_level.status.value}",
        f"low-level observability: {report.low_level.status.value}",
        f"verdicts agree: {'yes' if report.verdicts_agree else 'no'}",
    ]
    if report.hypotheses_hold:
        code = 0 if report.verdicts_agree else 1
    else:
        code = 2
        lines.append("not all hypotheses hold, so agreement is not asserted")
    payload = {
        "verdict": "AGREE" if report.verdicts_agree else "DISAGREE",
        "witnesses": _witout(report.high_level) + _witout(report.low_level),
        "bounds": {},
        "hypotheses": {
            "oc": report.oc.status.value,
            "loc": report.loc.status.value,
            "nonconflicting": report.nonconflicting.status.value,
        },
        "high_level": report.high_level.status.value,
        "low_level": report.low_level.status.value,
        "hypotheses_hold": report.hypotheses_hold,
    }
    return code, payload, lines


def _parser() -> _Parser:
    parser = _Parser(prog="desobs", description=__doc__)
    parser.add_argument("--version", action="version", version=f"desobs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("check-oc", _cmd_check_oc, "observation consistency of a generator's language")
    p.add_argument("--lang", required=True, help="generator file; its generated language is checked")
    p.add_argument("--t-bound", type=int, default=DEFAULT_T_BOUND)
    p.add_argument("--s-bound", type=int, default=DEFAULT_S_BOUND)

    p = add("check-loc", _cmd_check_loc, "local observation consistency of a generator's language")
    p.add_argument("--lang", required=True)
    p.add_argument("--s-bound", type=int, default=DEFAULT_S_BOUND)
    p.add_argument("--u-bound", type=int, default=None)

    p = add("check-obs", _cmd_check_obs, "observability of a specification against a plant")
    p.add_argument("--spec", required=True)
    p.add_argument("--plant", required=True, help="plant file; its profile is used")

    p = add("check-ctrl", _cmd_check_ctrl, "controllability of a specification against a plant")
    p.add_argument("--spec", required=True)
    p.add_argument("--plant", required=True)

    p = add("check-nonconflict", _cmd_check_nonconflict, "synchronous nonconflictingness of two marked languages")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("project", _cmd_project, "apply a named projection to a string")
    p.add_argument("--gen", required=True, help="generator file providing the alphabet profile")
    p.add_argument("--kind", required=True, choices=PROJECTION_KINDS)
    p.add_argument("--string", required=True, help="whitespace-separated event tokens")
    p.add_argument("--chars", action="store_true", help="treat the string as single-character events")

    p = add("compose", _cmd_compose, "parallel composition of two generators")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = add("pcp-solve", _cmd_pcp_solve, "bounded search for a correspondence solution")
    p.add_argument("--instance", required=True)
    p.add_argument("--k", type=int, default=DEFAULT_K)

    p = add("pcp-reduce", _cmd_pcp_reduce, "materialize the reduction language of an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--show", type=int, default=20, help="how many members to list")

    p = add("pcp-demo", _cmd_pcp_demo, "full pipeline: validate, solve, reduce, check consistency")
    p.add_argument("--instance", required=True)
    p.add_argument("--k", type=int, default=DEFAULT_K)

    p = add("theorem1", _cmd_theorem1, "high- versus low-level observability under the consistency hypotheses")
    p.add_argument("--plant", required=True)
    p.add_argument("--spec", required=True, help="generator over the high-level alphabet")

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except CliUsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    start = time.perf_counter()
    try:
        code, payload, lines = args.handler(args)
    except (ParseError, ValidationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except OSError as err:
        print(f"error: {err.filename or ''}: {err.strerror or err}", file=sys.stderr)
        return 3
    timing_ms = round((time.perf_counter() - start) * 1000, 3)
    if args.format == "json":
        report = {"tool_version": __version__, "command": args.command}
        report.update(payload)
        report["timing_ms"] = timing_ms
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
