"""Exact tools for extremal clique and independent-set counts in small graphs."""

__version__ = "0.1.0"

from .algebra import Order, QuadraticNumber, RadicalSum, binomial, compare, gen_binomial, u_of
from .canon import CanonicalForm, are_isomorphic, canonical_form, canonize
from .counting import (
    CliqueProfile,
    clique_counts,
    clique_profile,
    closed_form_equality_check,
    count_cliques,
    count_independent_sets,
    degree_double_count_bound,
    extremal_value_cliques,
    extremal_value_independent,
    k3_upper_bound,
    triangle_complement_identity,
)
from .enumeration import EnumerationConfig, EnumerationTask, enumerate_graphs, run_task, split_tasks
from .graph import (
    Graph,
    VertexSet,
    complement,
    complete,
    complete_bipartite,
    construct,
    cycle,
    degree,
    delete_vertex,
    disjoint_union,
    empty,
    extremal_cliques,
    induced_subgraph,
    max_degree,
    min_degree,
    neighborhood,
)
from .graph6 import graph6_decode, graph6_encode
from .kkbounds import FtBound, f_t, f_t_convexity_check, kk_clique_bound, kk_oracle, vertex_clique_bound_check
from .report import VerificationReport, report_read, report_write
from .search import search_open_conjecture
from .smoothing import SmoothingState, endpoint_lemma_check, smooth_to_extreme
from .verify import lemma_t3_case_split, verify_prop_cmp, verify_theorem_main
