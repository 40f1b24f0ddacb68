"""Run-wide resource budgets and sweep defaults.

Budgets exist to fail fast with BudgetExceeded instead of silently
starting hour-long exact computations.  The field budget can be overridden
with the HGFF_BUDGET environment variable.
"""

import os
from dataclasses import dataclass, field


def _env_q_max(default=1 << 20):
    raw = os.environ.get("HGFF_BUDGET")
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError("HGFF_BUDGET must be positive")
    return value


@dataclass
class RunConfig:
    """Budgets, sweep defaults and reproducibility knobs for one run."""

    q_max: int = field(default_factory=_env_q_max)
    phi_max: int = 4096          # largest tolerated degree phi(M) of a cyclotomic field
    sweep_max: int = 10**7       # largest q**n enumeration allowed per evaluation
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.q_max <= 0 or self.phi_max <= 0 or self.sweep_max <= 0:
            raise ValueError("budgets must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


DEFAULT = RunConfig()
