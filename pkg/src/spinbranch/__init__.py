"""Exact combinatorics of modular branching: signature sequences, crystal
operators on p-strict partitions, and raising-coefficient algebra."""

from .core import SignedSet, Weight, check_characteristic, res_p, signed_measure
from .crystal import (
    CrystalGraph,
    PStrictPartition,
    beta_signature,
    body_nodes,
    branching_tables,
    cont_p,
    crystal_graph,
    e_tilde,
    f_tilde,
    rim_nodes,
    rim_signature,
    spin_stats,
)
from .indices import (
    Certificate,
    ConstructionPlan,
    IndexClassification,
    classify_index,
    extension_plan,
    index_report,
    non_normal_certificate,
    primitive_plan,
)
from .poly import LFunction, Polynomial, exact_div, f_poly, g1, g2, lin_reduce, sigma_apply, u_poly
from .raising import (
    DeltaFunction,
    U0Element,
    bracket_hom,
    eval_at_weight,
    raising_closed,
    raising_rec,
    u0_b,
    u0_c,
    u0_h,
    u0_h_eps,
    u0_hbar,
)
from .sigseq import (
    Flow,
    SignMap,
    build_full_flow,
    flow_analyze,
    lead_plus_index,
    minus_w0_seq,
    partial_flow,
    product_of,
    r_beta,
    reduce_seq,
    resolution_of,
    section_of,
    split_index,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
