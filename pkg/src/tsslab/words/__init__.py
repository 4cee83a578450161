"""Exact arithmetic for the infinite groups in scope: the free group F2,
Baumslag-Solitar groups BS(1, n), and free products of finite table groups."""

from .freegroup import (  # noqa: F401
    FreeWord,
    CommonRoot,
    ObstructionEvidence,
    f2_commutes,
    f2_conjugate_test,
    f2_inverse,
    f2_multiply,
    f2_power,
    f2_reduce,
    f2_tss_obstruction,
    cyclic_reduce,
    primitive_root,
    parse_f2,
    parse_f2_letters,
    format_f2,
)
from .baumslag import (  # noqa: F401
    BsElement,
    BS_IDENTITY,
    BS_A,
    BS_B,
    SwapSearchResult,
    BsClassificationReport,
    bs_commutes,
    bs_conjugate,
    bs_inverse,
    bs_multiply,
    bs_power,
    bs_swap_search,
    bs_classification_check,
    parse_bs,
    format_bs,
)
from .freeproduct import (  # noqa: F401
    FpWord,
    FpTssVerdict,
    fp_identity,
    fp_from_syllables,
    fp_multiply,
    fp_inverse,
    fp_normalize,
    fp_cyclic_reduce,
    fp_primitive_root,
    fp_power,
    fp_tss_analyze,
    fp_ball,
    fp_commuting_cliques,
    parse_fp,
    format_fp,
)
