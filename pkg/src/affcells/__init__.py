"""Affine Schuetzenberger involution on tabloids and Green polynomials at -1."""

from .affine_perm import (
    AffinePermutation,
    InvalidWindow,
    PeriodMismatch,
    apply,
    compose,
    from_window,
    identity,
    inverse,
    omega_perm,
    random_element,
    s,
    tau,
)
from .rmatrix import (
    MalformedRow,
    OracleAmbiguity,
    ShapeMismatch,
    r_adjacent,
    r_two_row,
    r_two_row_oracle,
    reading_word,
    sort_to_shape,
)
from .rs import DuplicateEntry, StabilizationFailure, affine_p, affine_q, cell_shape, rs_insert
from .schuetzenberger import (
    NotStandard,
    affine_omega,
    evacuation,
    is_fixed_by_characterization,
    phi,
)
from .shapes import (
    Shape,
    Tabloid,
    domino_count,
    enumerate_rsyt,
    enumerate_syt,
    partitions_of,
    rho2,
    rsyt_count,
    union_partitions,
)
from .symfun import (
    IntPolynomial,
    PowerSumVector,
    SizeMismatch,
    b_of,
    character,
    green_at_minus_one,
    green_polynomial,
    kostka_foulkes,
    multiply,
    plethysm_sk_p2,
    qprime_at_minus_one,
    scalar_product,
    schur_to_powersum,
    z_of,
)
from .verify import (
    VerificationRow,
    count_fixed,
    verify_evacuation_domino,
    verify_main_theorem,
    verify_prop_grind,
    verify_prop_str,
    verify_rs_omega,
)
