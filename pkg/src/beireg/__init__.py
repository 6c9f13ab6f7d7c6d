"""Regularity of binomial edge ideals of trees: jewel invariants, closed-form
bounds, and a brute-force initial-ideal oracle."""

from .bounds import (
    RegularityEstimate,
    RuleConflict,
    TraceStep,
    applicable_rules,
    estimate,
    exact_rules,
    family_gstm_reg,
    gstm_member,
    matsuda_murai_bounds,
    thm_lower,
    thm_upper,
)
from .constructions import caterpillar, fig2_tree, gamma_tree, jewel_tree, two_jewel_chain
from .graph import (
    EhhTriple,
    GraphError,
    NotATreeError,
    ParseError,
    SimpleGraph,
    SpinePath,
    Tree,
    add_edge,
    all_labeled_trees,
    attach_clique,
    attach_pendants,
    attach_star_via_leaf,
    complete_graph,
    delete_edge,
    delete_vertex,
    drop_isolated,
    ehh_transform,
    g_e_completion,
    induced_subgraph,
    parse_graph,
    path_graph,
    prufer_decode,
    prufer_encode,
    random_tree,
    spine,
    split_at_degree_two,
    star_graph,
    validate_tree,
)
from .jewels import CaterpillarTrim, JewelProfile, is_caterpillar, jewel_profile, jewel_subgraph, n_geq, trim_caterpillars
from .oracle import (
    GF2,
    AdmissiblePath,
    BettiTable,
    EdgeBinomial,
    FieldSpec,
    OracleCapExceeded,
    SquarefreeMonomialIdeal,
    admissible_paths,
    hochster_regularity,
    initial_ideal,
    oracle_reg,
    oracle_with_table,
    reduced_homology_dims,
)
from .report import AnalyzeReport, analyze_tree, to_dot
from .verify import VerifyReport, check_tree, run_verify

__version__ = "0.1.0"
