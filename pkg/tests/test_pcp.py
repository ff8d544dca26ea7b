import itertools

import pytest

from desobs.automata import Status, ValidationError
from desobs.consistency import OcWitnessRequest, verify_oc_witness
from desobs.pcp import (
    CRITICAL_PAIR,
    PcpInstance,
    abstraction_image,
    abstraction_pair_witnesses,
    build_reduction_oracle,
    check_oc_reduction,
    concatenations,
    decode_critical_witness,
    find_critical_witness,
    index_event,
    is_solution,
    reduction_alphabet,
    reduction_profile,
    solve_bounded,
    validate,
)
from desobs.projections import projection_for
from oracles import proj, reference_reduction_members


def canonical():
    return PcpInstance(
        base_alphabet=frozenset({"a", "b"}),
        pairs=(
            (("a",), ("b", "a", "a")),
            (("a", "b"), ("a", "a")),
            (("b", "b", "a"), ("b", "b")),
        ),
    )


def unsolvable():
    # w always one letter longer than u, so the concatenations never align
    return PcpInstance(base_alphabet=frozenset({"a", "b"}), pairs=((("a", "b"), ("a",)),))


def one_pair_mismatch():
    return PcpInstance(base_alphabet=frozenset({"a", "b"}), pairs=((("a", "b"), ("a", "a")),))


# reference enumeration counts for the canonical instance, bounds 0..6,
# computed from the language definition by expanding index sequences and
# collecting prefixes (tests/oracles.py)
CANONICAL_MEMBER_COUNTS = (1, 5, 20, 71, 230, 713, 2165)


def test_validate_triage():
    assert validate(canonical()).status == "ok"
    assert validate(PcpInstance(frozenset("ab"), ())).status == "invalid"
    v = validate(PcpInstance(frozenset("ab"), ((("a",), ("a",)),)))
    assert v.status == "trivially-solvable" and v.index == 1
    v = validate(PcpInstance(frozenset({"a", "@"}), ((("a",), ("@",)),)))
    assert v.status == "invalid" and "reserved" in v.reason
    v = validate(PcpInstance(frozenset("ab"), ((("a",), ()),)))
    assert v.status == "invalid" and "empty word" in v.reason
    v = validate(PcpInstance(frozenset("ab"), ((("a",), ("c",)),)))
    assert v.status == "invalid" and "outside" in v.reason
    v = validate(PcpInstance(frozenset({"a", "i1"}), ((("a",), ("i1",)),)))
    assert v.status == "invalid" and "index events" in v.reason


def test_concatenations_and_solution():
    inst = canonical()
    w, u = concatenations(inst, (3, 2, 3, 1))
    assert w == tuple("bbaabbbaa")
    assert u == tuple("bbaabbbaa")
    assert is_solution(inst, (3, 2, 3, 1))
    assert not is_solution(inst, ())
    assert not is_solution(inst, (1,))
    with pytest.raises(ValidationError):
        concatenations(inst, (4,))


def test_solve_bounded_finds_the_shortest_solution():
    assert solve_bounded(canonical(), 6) == (3, 2, 3, 1)
    assert solve_bounded(canonical(), 3) is None
    assert solve_bounded(unsolvable(), 8) is None
    trivial = PcpInstance(frozenset("ab"), ((("b",), ("a",)), (("a",), ("a",))))
    assert solve_bounded(trivial, 3) == (2,)
    with pytest.raises(ValidationError):
        solve_bounded(PcpInstance(frozenset("ab"), ()), 3)


def test_solve_bounded_matches_exhaustive_reference():
    instances = [
        canonical(),
        unsolvable(),
        one_pair_mismatch(),
        PcpInstance(frozenset("ab"), ((("a", "b"), ("a",)), (("b",), ("a", "b")))),
        PcpInstance(frozenset("ab"), ((("a",), ("a", "b")), (("b", "a"), ("a",)))),
    ]
    for inst in instances:
        found = solve_bounded(inst, 5)
        reference = next(
            (
                seq
                for length in range(1, 6)
                for seq in itertools.product(range(1, inst.size + 1), repeat=length)
                if is_solution(inst, seq)
            ),
            None,
        )
        assert found == reference


def test_reduction_alphabet_and_profile():
    inst = canonical()
    sigma = reduction_alphabet(inst)
    assert sigma == frozenset({"a", "b", "i1", "i2", "i3", "@", "#", "$"})
    prof = reduction_profile(inst)
    assert prof.high == frozenset({"@", "#"})
    # base letters and index events are observed; both markers and $ are not
    assert prof.observable == frozenset({"a", "b", "i1", "i2", "i3"})
    assert prof.controllable == frozenset()
    assert index_event(12) == "i12"


def test_oracle_membership_spot_checks():
    inst = canonical()
    o = build_reduction_oracle(inst)
    # full members of both branches
    assert o.contains(("@", "i1", "$", "a", "@"))
    assert o.contains(("i1", "$", "a", "a", "b", "#"))
    # prefixes are members
    assert o.contains(())
    assert o.contains(("@",))
    assert o.contains(("@", "i3", "i2"))
    assert o.contains(("i2", "$", "a"))
    # the letters must spell the reversed concatenation
    assert not o.contains(("@", "i1", "$", "b", "@"))
    assert not o.contains(("@", "i1", "$", "a", "#"))
    assert not o.contains(("i1", "$", "a", "a", "b", "@"))
    assert not o.contains(("i1", "i1", "$", "a", "a", "b", "#"))
    assert not o.contains(("$",))
    assert not o.contains(("x",))


def test_oracle_enumeration_matches_reference():
    inst = canonical()
    o = build_reduction_oracle(inst)
    for bound in range(7):
        members = o.enumerate_up_to(bound)
        assert len(members) == CANONICAL_MEMBER_COUNTS[bound]
        assert members == reference_reduction_members(inst.pairs, bound)
        # contains() agrees with enumeration on everything enumerated
        for s in members:
            assert o.contains(s)


def test_abstraction_image_thresholds():
    inst = canonical()
    # min |w| = 1 puts the first full w-branch string at length 5; min |u| = 2
    # puts the first full u-branch string at length 5 as well
    assert abstraction_image(inst, 0) == {()}
    assert abstraction_image(inst, 1) == {(), ("@",)}
    assert abstraction_image(inst, 4) == {(), ("@",)}
    full = {(), ("@",), ("@", "@"), ("#",)}
    assert abstraction_image(inst, 5) == full
    assert abstraction_image(inst, 30) == full
    o = build_reduction_oracle(inst)
    for bound in range(7):
        enumerated = {proj(s, {"@", "#"}) for s in o.enumerate_up_to(bound)}
        assert abstraction_image(inst, bound) == enumerated


def test_abstraction_pair_witnesses_cover_all_six():
    inst = canonical()
    sol = solve_bounded(inst, 6)
    witnesses = abstraction_pair_witnesses(inst, sol)
    assert len(witnesses) == 6
    pairs = {(t, t2) for t, t2, _ in witnesses}
    images = [(), ("@",), ("@", "@"), ("#",)]
    assert pairs == {
        (t, t2) for i, t in enumerate(images) for t2 in images[i + 1 :]
    } or len(pairs) == 6
    o = build_reduction_oracle(inst)
    prof = reduction_profile(inst)
    for t, t2, w in witnesses:
        assert verify_oc_witness(o, prof, OcWitnessRequest(t, t2), w)


def test_find_critical_witness_and_decode():
    inst = canonical()
    found = find_critical_witness(inst, 6)
    assert found.sequence == (3, 2, 3, 1)
    assert decode_critical_witness(inst, found.witness) == (3, 2, 3, 1)
    o = build_reduction_oracle(inst)
    prof = reduction_profile(inst)
    assert verify_oc_witness(o, prof, OcWitnessRequest(*CRITICAL_PAIR), found.witness)
    # every rejected sequence is a genuine non-solution
    for seq in found.rejected:
        assert not is_solution(inst, seq)
    missing = find_critical_witness(unsolvable(), 6)
    assert missing.witness is None and missing.sequence is None
    assert len(missing.rejected) == 6


def test_decode_rejects_foreign_witnesses():
    inst = canonical()
    from desobs.consistency import OcWitness

    with pytest.raises(ValidationError):
        decode_critical_witness(inst, OcWitness(("@", "@"), ("#",)))


def test_check_oc_reduction_verdicts():
    v = check_oc_reduction(canonical(), 6)
    assert v.status is Status.HOLDS
    v = check_oc_reduction(canonical(), 3)
    assert v.status is Status.INCONCLUSIVE
    assert v.bound == 3
    v = check_oc_reduction(unsolvable(), 8)
    assert v.status is Status.INCONCLUSIVE
    assert "@ @" in v.detail and "#" in v.detail


def test_projection_laws_hold_on_reduction_members():
    inst = canonical()
    o = build_reduction_oracle(inst)
    prof = reduction_profile(inst)
    a = projection_for(prof, "A")
    p = projection_for(prof, "P")
    p_hi = projection_for(prof, "P_hi")
    a_o = projection_for(prof, "A_o")
    for s in sorted(o.enumerate_up_to(6), key=lambda x: (len(x), x))[:300]:
        assert p_hi(a(s)) == a_o(p(s)) == ()
