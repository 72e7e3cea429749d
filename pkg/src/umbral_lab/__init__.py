"""Exact arithmetic for derangement polynomials, umbral moment evaluation,
the xi binomial sums, and deterministic verification of the identities
relating them."""

from .identities import (
    CHAIN_LINES,
    Identity,
    ProofTrace,
    VerifyReport,
    Witness,
    replay_proof,
    verify,
    verify_abel,
    verify_basic_property,
    verify_conjecture,
    verify_proof_chain,
    verify_recursion,
    verify_umbral_property,
    verify_xi_rewrites,
)
from .lacasse import (
    XiValue,
    xi,
    xi2,
    xi2_closed_scaled,
    xi2_scaled,
    xi2_via_derangement_scaled,
    xi_scaled,
    xi_value,
    xi2_value,
)
from .polynomial import IntPoly, binomial_power, poly_add, poly_eval, poly_mul
from .sequences import (
    binomial,
    derangement,
    derangement_overrides,
    factorial,
    self_power,
)
from .umbra import (
    UmbralExpr,
    derangement_poly,
    derangement_poly_eval,
    substitute_shift,
    umbral_eval,
)

__version__ = "0.1.0"

__all__ = [
    "CHAIN_LINES",
    "Identity",
    "IntPoly",
    "ProofTrace",
    "UmbralExpr",
    "VerifyReport",
    "Witness",
    "XiValue",
    "binomial",
    "binomial_power",
    "derangement",
    "derangement_overrides",
    "derangement_poly",
    "derangement_poly_eval",
    "factorial",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "replay_proof",
    "self_power",
    "substitute_shift",
    "umbral_eval",
    "verify",
    "verify_abel",
    "verify_basic_property",
    "verify_conjecture",
    "verify_proof_chain",
    "verify_recursion",
    "verify_umbral_property",
    "verify_xi_rewrites",
    "xi",
    "xi2",
    "xi2_closed_scaled",
    "xi2_scaled",
    "xi2_value",
    "xi2_via_derangement_scaled",
    "xi_scaled",
    "xi_value",
    "__version__",
]
