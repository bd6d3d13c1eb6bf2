"""Exact Halton sequences, exact star discrepancy, and a machine-checked
witness for the discrepancy lower bound N * D* >= m^s / (8 * p0)."""

from .discrepancy import (
    AnchoredBox,
    HalfOpenBox,
    PointSet,
    contains,
    local_discrepancy,
    local_discrepancy_subbox,
    star_discrepancy_exact,
    star_discrepancy_lower_bound,
)
from .kernel import BACKEND as KERNEL_BACKEND
from .numtheory import (
    ResidueClass,
    crt_combine,
    mod_inverse,
    multiplicative_order,
    pairwise_coprime,
)
from .sequence import (
    BaseVector,
    DigitExpansion,
    Point,
    digit_reversal,
    digits_of,
    fractional_digits,
    halton_point,
    halton_stream,
    radical_inverse,
)
from .witness import (
    TauVector,
    WitnessConfig,
    WitnessCorner,
    WitnessInstance,
    WitnessReport,
    alpha_closed,
    alpha_direct,
    beta_check,
    build_instance,
    combined_residue,
    crt_multiplier,
    decompose_corner,
    hat_index,
    modulus_P,
    prefix_discrepancy,
    rho_closed,
    shift_A,
    start_index,
    tau_vector,
    verify_theorem,
    witness_corner,
)

__version__ = "0.1.0"

__all__ = [
    "AnchoredBox",
    "BaseVector",
    "DigitExpansion",
    "HalfOpenBox",
    "KERNEL_BACKEND",
    "Point",
    "PointSet",
    "ResidueClass",
    "TauVector",
    "WitnessConfig",
    "WitnessCorner",
    "WitnessInstance",
    "WitnessReport",
    "alpha_closed",
    "alpha_direct",
    "beta_check",
    "build_instance",
    "combined_residue",
    "contains",
    "crt_combine",
    "crt_multiplier",
    "decompose_corner",
    "digit_reversal",
    "digits_of",
    "fractional_digits",
    "halton_point",
    "halton_stream",
    "hat_index",
    "local_discrepancy",
    "local_discrepancy_subbox",
    "mod_inverse",
    "modulus_P",
    "multiplicative_order",
    "pairwise_coprime",
    "prefix_discrepancy",
    "radical_inverse",
    "rho_closed",
    "shift_A",
    "star_discrepancy_exact",
    "star_discrepancy_lower_bound",
    "start_index",
    "tau_vector",
    "verify_theorem",
    "witness_corner",
    "__version__",
]
