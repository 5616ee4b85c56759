"""Corner-avoiding constructions, popular-difference spectra, and hypergraph
density kernels, all cross-checked by exact brute-force oracles."""

from .avoiders import (
    AvoidanceReport,
    AvoiderParams,
    CornerAvoider,
    FivePointAvoider,
    IntervalSystem,
    build_corner_avoider,
    build_five_point_avoider,
    check_corner_transfer,
    check_five_point_transfer,
    f_quad,
    lift_avoider,
    load_avoider,
    norm_to_nearest_int,
    pattern_projection,
    theta_constants,
    verify_corner_avoidance,
)
from .behrend import (
    RELATION_3AP,
    RELATION_SUM3,
    DigitSphereParams,
    QCSystem,
    SphereSet,
    behrend_3ap_free,
    behrend_qc_free,
    behrend_sum_free,
    find_qc_witness,
    find_relation_witness,
    is_qc,
    qc_coefficients,
    verify_relation_free,
)
from .contfrac import (
    AlphaCheck,
    AlphaSequence,
    approximants,
    build_alpha_hard,
    quotients_from_pair,
    verify_alpha,
)
from .diamond import (
    ProgressionWitness,
    TripartiteGraph,
    diamond_free_from_ap_free,
    find_cyclic_3ap,
    triangle_hypergraph,
    verify_diamond_free,
)
from .hypergraph import (
    Hypergraph,
    PruneResult,
    StepKernel,
    edge_density,
    hom_count,
    kforce_density,
    kforce_motif,
    prune_sparse_pairs,
    single_edge_motif,
    triforce_motif,
    triforce_weighted,
)
from .mandache import MandacheReport, kernel_fingerprint, mandache_report, sample_mandache
from .patterns import (
    GridSet,
    Group,
    GroupSet,
    Pattern,
    Spectrum,
    corner_count_group,
    count_pattern,
    spectrum,
)

__version__ = "0.1.0"
