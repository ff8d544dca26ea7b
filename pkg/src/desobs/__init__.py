"""Supervisory control of discrete-event systems under partial observation.

Generators with partial transition maps, natural projections, supervisory
checks (controllability, observability, nonconflictingness), observation
consistency of abstractions, and a reduction from the Post correspondence
problem showing where consistency checking stops being decidable.
"""

__version__ = "0.1.0"

from .automata import (
    EPSILON,
    DifferenceWitness,
    EventString,
    Finiteness,
    Generator,
    LanguageOracle,
    Status,
    ValidationError,
    Verdict,
    accessible_part,
    chars,
    delta_star,
    enumerate_language,
    format_string,
    generates,
    is_acyclic,
    language_difference,
    longest_string_length,
    mark_all_states,
    marks,
    oracle_of,
    parallel_compose,
    prefix_closure_generator,
    tokens,
)
from .projections import (
    AlphabetProfile,
    NaturalProjection,
    PROJECTION_KINDS,
    check_diagram,
    inverse_project_generator,
    project,
    project_generator,
    projection_for,
    source_enumeration_bound,
)
from .supervisory import (
    ControllabilityWitness,
    ObservabilityWitness,
    brute_force_observability,
    check_controllability,
    check_lm_closed,
    check_observability,
    check_sync_nonconflicting,
    verify_controllability_witness,
    verify_nonconflict_witness,
    verify_observability_witness,
)
from .consistency import (
    LocViolation,
    LocWitness,
    OcViolation,
    OcWitness,
    OcWitnessRequest,
    Theorem1Report,
    check_loc,
    check_oc,
    find_loc_witness,
    find_oc_witness,
    theorem1_harness,
    verify_loc_witness,
    verify_oc_witness,
)
from .pcp import (
    CRITICAL_PAIR,
    CriticalSearch,
    IndexSequence,
    PcpInstance,
    PcpValidation,
    abstraction_image,
    abstraction_pair_witnesses,
    build_reduction_oracle,
    check_oc_reduction,
    concatenations,
    decode_critical_witness,
    find_critical_witness,
    index_event,
    is_solution,
    reduction_profile,
    solve_bounded,
    validate,
)
from .textio import (
    ParseError,
    load_generator,
    load_pcp,
    parse_generator_text,
    parse_pcp_text,
    serialize_generator,
    serialize_pcp,
)
