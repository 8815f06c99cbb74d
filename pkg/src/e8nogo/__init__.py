"""Exact-arithmetic Lie theory engine for E8 and its chirality no-go check."""

from .roots import (
    IrrepLabel,
    RepMultiset,
    RootSystem,
    SimpleType,
    build_root_system,
    irrep,
    longest_element_action,
    pairing,
    weight_system,
    weyl_dimension,
)
from .chevalley import (
    AlgebraElement,
    ChevalleyAlgebra,
    Subalgebra,
    bracket,
    build_e8_chevalley,
    centralizer,
    commuting_pair,
    identify_type,
    root_triple,
    sl2_triple_from_defining_vector,
    triple_from_orthogonal_roots,
)
from .sl2 import (
    DefiningVector,
    MarkedDiagram,
    PartitionSpec,
    classify_sl2_upto_index,
    defining_vector_from_partition,
    dynkin_index,
    irrep_index_in_sln,
    omega_index_row_e8,
    partition_index_son,
)
from .decomp import (
    BiTable,
    CartanEmbedding,
    WeightMultiset,
    branch,
    diagonal_embedding,
    orthogonal_block_embedding,
    peel_to_bitable,
    refine_bitable,
    sl2_weights,
)
from .reality import (
    CenterElement,
    RealityType,
    dual_weight,
    eigenspace_dims,
    frobenius_schur,
    minus_one_in_weyl,
    self_conjugate,
)
from .toe import (
    CandidateConfig,
    CandidateReport,
    dimension_no_go,
    enumerate_candidates,
    evaluate_candidate,
    theorem_report,
)

__version__ = "0.1.0"
