"""skewper: construction, analysis and isomorphism classification of
skew-perspective partial Steiner triple systems."""

from .analysis import (
    FreeClique,
    Reperspective,
    StpDiagram,
    cross_fixed_level_criterion,
    cross_predicate,
    enumerate_free_cliques,
    free_star_indices,
    freely_contains,
    reperspective,
    star_clique_indices,
    stp_diagram,
    stp_equivalent,
)
from .classify import (
    ALL_KEYS,
    EXPECTED_NONTRIVIAL_AUT,
    EXPECTED_REPRESENTATIVES,
    EXPECTED_THREE_PLUS_CLASSES,
    EXPECTED_THREE_PLUS_PAIRS_S5,
    EXPECTED_TWO_K5_CLASSES,
    MU_CATALOG,
    PHI_CATALOG,
    ClassificationReport,
    ClassSummary,
    ExpectationCheck,
    InstanceKey,
    InstanceSummary,
    build_instance,
    classify_all,
    diagnostic_text,
    expectation_checks,
)
from .constructions import (
    Perspective,
    PerspectiveLabeling,
    VeblenLabel,
    apply_pair_map,
    axis_config,
    grassmannian,
    kappa,
    multiset_label,
    pair_label,
    parse_multiset_label,
    parse_pair_label,
    parse_veblen_text,
    perspective,
    perspective_from_config,
    veblen,
    veblen_label,
    veronesian,
    veronesian_axis,
)
from .formats import (
    FORMAT_NAME,
    emit_dot,
    emit_json,
    emit_psts,
    emit_stp_dot,
    parse_json,
    parse_psts,
)
from .incidence import (
    Config,
    ConfigParams,
    ValidationReport,
    collinear,
    join,
    lines_through,
    make_config,
    parameters,
    relabel,
    validate,
)
from .isomorphism import (
    AutomorphismGroup,
    CanonicalCertificate,
    PerspectiveIso,
    are_isomorphic,
    automorphism_group,
    canonical_certificate,
    perspective_iso,
    s_map,
)
from .perms import (
    Perm,
    conjugator,
    format_cycles,
    parse_cycles,
    permutations_with_fixed_point,
    symmetric_group,
)
from .skews import (
    BarRecognition,
    PhiSequence,
    Skew,
    all_pairs,
    bar_alpha,
    conjugate_skew,
    format_phi_text,
    gamma_between,
    identity_skew,
    make_pair,
    parse_phi_text,
    phi_conjugate,
    phi_from_skew,
    phi_inverse,
    phi_sequence,
    recognize_bar,
    skew_from_phi,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_KEYS",
    "AutomorphismGroup",
    "BarRecognition",
    "CanonicalCertificate",
    "ClassSummary",
    "ClassificationReport",
    "Config",
    "ConfigParams",
    "EXPECTED_NONTRIVIAL_AUT",
    "EXPECTED_REPRESENTATIVES",
    "EXPECTED_THREE_PLUS_CLASSES",
    "EXPECTED_THREE_PLUS_PAIRS_S5",
    "EXPECTED_TWO_K5_CLASSES",
    "ExpectationCheck",
    "FORMAT_NAME",
    "FreeClique",
    "InstanceKey",
    "InstanceSummary",
    "MU_CATALOG",
    "PHI_CATALOG",
    "Perm",
    "Perspective",
    "PerspectiveIso",
    "PerspectiveLabeling",
    "PhiSequence",
    "Reperspective",
    "Skew",
    "StpDiagram",
    "ValidationReport",
    "VeblenLabel",
    "all_pairs",
    "apply_pair_map",
    "are_isomorphic",
    "automorphism_group",
    "axis_config",
    "bar_alpha",
    "build_instance",
    "canonical_certificate",
    "classify_all",
    "collinear",
    "conjugate_skew",
    "conjugator",
    "cross_fixed_level_criterion",
    "cross_predicate",
    "diagnostic_text",
    "emit_dot",
    "emit_json",
    "emit_psts",
    "emit_stp_dot",
    "enumerate_free_cliques",
    "expectation_checks",
    "format_cycles",
    "format_phi_text",
    "free_star_indices",
    "freely_contains",
    "gamma_between",
    "grassmannian",
    "identity_skew",
    "join",
    "kappa",
    "lines_through",
    "make_config",
    "make_pair",
    "multiset_label",
    "pair_label",
    "parameters",
    "parse_cycles",
    "parse_json",
    "parse_multiset_label",
    "parse_pair_label",
    "parse_phi_text",
    "parse_psts",
    "parse_veblen_text",
    "perspective",
    "perspective_from_config",
    "perspective_iso",
    "permutations_with_fixed_point",
    "phi_conjugate",
    "phi_from_skew",
    "phi_inverse",
    "phi_sequence",
    "recognize_bar",
    "relabel",
    "reperspective",
    "s_map",
    "skew_from_phi",
    "star_clique_indices",
    "stp_diagram",
    "stp_equivalent",
    "symmetric_group",
    "validate",
    "veblen",
    "veblen_label",
    "veronesian",
    "veronesian_axis",
    "zeta",
]
