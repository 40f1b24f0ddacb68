"""hgff: exact hypergeometric character sums over finite fields.

Gauss and Jacobi sums, period functions and their normalizations, point
counts on hypergeometric varieties, local zeta factors, and a sweep
engine that verifies a catalog of transformation and evaluation
identities exactly (cyclotomic integer arithmetic, no floating point in
any asserted equality).
"""

from .chars import MultChar, RationalParam, iota, kappa, lift_norm  # noqa: F401
from .cyclo import CycloNum, cyclotomic_polynomial, embed  # noqa: F401
from .fields import FieldElement, FiniteField, construct_field  # noqa: F401
from .hyper import (  # noqa: F401
    HGSpec,
    f_normalized,
    is_primitive,
    period_direct,
    period_spectral,
    rational_spec,
    spec_from_exponents,
)
from .sums import gauss_sum, jacobi_from_gauss, jacobi_sum  # noqa: F401
from .varieties import (  # noqa: F401
    GLCurve,
    HGVariety,
    count_affine_brute,
    count_via_periods,
    genus,
    glc_trace,
    legendre_count,
)
from .zeta import (  # noqa: F401
    ZetaFactor,
    charpoly_2,
    frobenius_quadratic,
    lifted_period,
    newton_series_check,
    weil_purity_check,
)

__version__ = "0.1.0"
