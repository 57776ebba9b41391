"""Exact structural invariants and character series for (g, sl(2))-modules.

Everything is computed over the rationals: root systems and Weyl groups of
classical rank at most four plus G2, sl(2) embeddings given by a defining
vector, the compatible minimal parabolic, reconstructibility bounds,
truncated t- and k-characters, central-character blocks with their
multiplicity matrices, and socle characters.
"""

from .blocks import (
    BlockElement,
    CentralCharacter,
    IntegralWeylGroup,
    IwasawaSupport,
    MultiplicityMatrix,
    ReconstructibilityReport,
    SocleCharacterResult,
    central_character,
    central_character_from_kappa,
    enumerate_block,
    integral_weyl_subgroup,
    iwasawa_sl3_support,
    multiplicity_matrix,
    reconstructibility_report,
    socle_k_character,
)
from .charseries import (
    ModuleDatumE,
    PartitionTable,
    euler_k_character,
    f1_k_character,
    partition_function,
    t_character_N,
)
from .cohomology import (
    KCharacter,
    Regime,
    TruncatedTCharacter,
    e1_page_dimension,
    exterior_weights,
    nk_cohomology,
    top_degree_regime,
    top_n_vanishing,
)
from .errors import (
    DimensionMismatch,
    GhcseriesError,
    GroupMismatch,
    IndexOutOfRange,
    InternalInconsistency,
    InvalidInput,
    NoSl2Triple,
    NonIntegralGrading,
    NotARoot,
    NotIntegrable,
    OutOfRegime,
    SingularBlockUnsupported,
    UnsupportedAlgebra,
    UnsupportedLevi,
    UnsupportedRank,
    UnsupportedRegime,
    VirtualNotAllowed,
    WindowTooNarrow,
)
from .fixtures import FIXTURES, FixturePair, get_fixture
from .parabolic import (
    BoundsReport,
    CompatibleParabolic,
    GenericityResult,
    ParabolicInvariants,
    Threshold,
    b_dominant,
    bounds_report,
    genericity_check,
    genericity_scan,
    invariants,
    minimal_parabolic,
    mu_omega,
)
from .rootsys import (
    RootSystem,
    Weight,
    WeylElement,
    bruhat_leq,
    build_root_system,
    coroot_pairing,
    dot_orbit,
    evaluate,
    inner_product,
    project_trace_zero,
    weyl_group,
)
from .sl2embed import (
    FiniteTCharacter,
    Sl2Decomposition,
    Sl2Embedding,
    from_defining_vector,
    from_principal,
    from_root,
    is_regular,
    sl2_decomposition,
    t_character_of_g,
)

__version__ = "0.1.0"

__all__ = [
    "BlockElement",
    "BoundsReport",
    "CentralCharacter",
    "CompatibleParabolic",
    "DimensionMismatch",
    "FIXTURES",
    "FiniteTCharacter",
    "FixturePair",
    "GenericityResult",
    "GhcseriesError",
    "GroupMismatch",
    "IndexOutOfRange",
    "IntegralWeylGroup",
    "InternalInconsistency",
    "InvalidInput",
    "IwasawaSupport",
    "KCharacter",
    "ModuleDatumE",
    "MultiplicityMatrix",
    "NoSl2Triple",
    "NonIntegralGrading",
    "NotARoot",
    "NotIntegrable",
    "OutOfRegime",
    "ParabolicInvariants",
    "PartitionTable",
    "ReconstructibilityReport",
    "Regime",
    "RootSystem",
    "SingularBlockUnsupported",
    "Sl2Decomposition",
    "Sl2Embedding",
    "SocleCharacterResult",
    "Threshold",
    "TruncatedTCharacter",
    "UnsupportedAlgebra",
    "UnsupportedLevi",
    "UnsupportedRank",
    "UnsupportedRegime",
    "VirtualNotAllowed",
    "Weight",
    "WeylElement",
    "WindowTooNarrow",
    "b_dominant",
    "bounds_report",
    "bruhat_leq",
    "build_root_system",
    "central_character",
    "central_character_from_kappa",
    "coroot_pairing",
    "dot_orbit",
    "e1_page_dimension",
    "enumerate_block",
    "euler_k_character",
    "evaluate",
    "exterior_weights",
    "f1_k_character",
    "from_defining_vector",
    "from_principal",
    "from_root",
    "genericity_check",
    "genericity_scan",
    "get_fixture",
    "inner_product",
    "integral_weyl_subgroup",
    "invariants",
    "is_regular",
    "iwasawa_sl3_support",
    "minimal_parabolic",
    "mu_omega",
    "multiplicity_matrix",
    "nk_cohomology",
    "partition_function",
    "project_trace_zero",
    "reconstructibility_report",
    "sl2_decomposition",
    "socle_k_character",
    "t_character_N",
    "t_character_of_g",
    "top_degree_regime",
    "top_n_vanishing",
    "weyl_group",
]
