"""hyplac: irreducibility, rigidity, unitarity and finite monodromy of
hypergeometric local systems with rational parameters, in exact arithmetic."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    HyplacError,
    InvalidInput,
    NonGenericParameters,
    PrecisionExhausted,
    Reducible,
)
from .params import (  # noqa: E402
    HypergeometricParameters,
    dual,
    gamma,
    is_irreducible,
    normalize,
    rigidity_index,
    splitting_field_order,
)
from .parabolic import StabilityVerdict, build_parabolic, is_stable  # noqa: E402
from .interlacing import has_finite_monodromy, interlaces, is_unitary  # noqa: E402

__all__ = [
    "HyplacError",
    "InvalidInput",
    "NonGenericParameters",
    "PrecisionExhausted",
    "Reducible",
    "HypergeometricParameters",
    "dual",
    "gamma",
    "is_irreducible",
    "normalize",
    "rigidity_index",
    "splitting_field_order",
    "StabilityVerdict",
    "build_parabolic",
    "is_stable",
    "has_finite_monodromy",
    "interlaces",
    "is_unitary",
]
