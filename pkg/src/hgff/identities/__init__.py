"""Declarative identity registry and exact sweep verification engine."""

from .engine import (  # noqa: F401
    REGISTRY,
    EvalContext,
    IdentityRecord,
    context_for,
    delta_audit,
    fields_from_qs,
    verify,
    verify_all,
)

# importing the definition modules populates REGISTRY
from . import defs_basic  # noqa: F401,E402
from . import defs_kummer24  # noqa: F401,E402
from . import defs_quadratic  # noqa: F401,E402
from . import defs_cubic  # noqa: F401,E402
from . import defs_algebraic  # noqa: F401,E402
from . import defs_conjectures  # noqa: F401,E402
