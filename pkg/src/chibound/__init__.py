"""Exact desk-scale tools for chi-boundedness: forbidden patterns, constructive
colourings, willow certificates and shift-power constructions."""
from __future__ import annotations

from .colorers import (
    BoundReport, bowtie_f, bowtie_partition, color_bowtie_free, color_exact,
    color_lollipop_free, color_lollipop_star_free, color_mkt_free, color_pineapple_free,
    find_fair_split, homogeneous_set_from_split, is_fair, is_split, is_tidy, ramsey_bound,
)
from .config import caps
from .constructions import (
    OrientedGraph, build_descartes, extract_from_shift, min_direction_changes, shift_power,
    verify_acyclic_properties, verify_shift_claims,
)
from .errors import (
    CapExceededError, CertificateError, ChiboundError, ConstructionError,
    CyclicOrientationError, ImproperColoringError, NonUniquePathError, NotMemberError,
    SearchTimeout,
)
from .graph import (
    Coloring, Graph, VertexPartition, Witness, complement, compose_coloring_by_substitution,
    find_homogeneous_set, induced, is_complete_multipartite, is_homogeneous, substitute,
)
from .io import from_dimacs, from_graph6, to_dimacs, to_graph6
from .patterns import PatternSpec, contains_family_member, make_pattern, parse_pattern
from .solvers import (
    chi_upto, chromatic_number, clique_number, contains_induced, is_k_perfect, is_perfect,
    max_clique,
)
from .willow import (
    WeightedOrientedTree, WillowCertificate, builtin_certificate, lift_modulus,
    search_certificate, verify_certificate,
)

__version__ = "0.1.0"
