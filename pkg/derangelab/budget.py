# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, replace

from .errors import BudgetExceeded, DomainError

log = logging.getLogger(__name__)

PERM = "perm"
SWEEP = "sweep"
BIDER = "bider"

# hard ceilings; no override can go past these
CEILINGS = {PERM: 10, SWEEP: 10, BIDER: 6}


@dataclass(frozen=True)
class Budgets(object):
    """Largest ``n`` each command family may be run with.

    :param perm_max_n: limit for the plain enumerators (S_n, D_n, SEF_n)
    :param sweep_max_n: limit for identity verifiers and probes that
                        fold over S_n or D_n
    :param bider_max_n: limit for anything enumerating biderangements
    """
    perm_max_n: int = 10
    sweep_max_n: int = 8
    bider_max_n: int = 5

    def limit(self, family):
        configured = getattr(self, "%s_max_n" % family)
        return min(configured, CEILINGS[family])

    def check(self, family, n):
        """Raise :py:class:`~derangelab.errors.BudgetExceeded` unless
        ``1 <= n <= limit(family)``."""
        if n < 1:
            raise DomainError("n must be at least 1, got %s" % n)
        limit = self.limit(family)
        if n > limit:
            log.warning("refusing %s run at n=%s (limit %s)", family, n, limit)
            raise BudgetExceeded(family, n, limit)

    def with_override(self, max_n):
        """Returns a copy where every family is limited to ``max_n``
        (still subject to the hard ceilings)."""
        if max_n is None:
            return self
        return replace(self, perm_max_n=max_n, sweep_max_n=max_n,
                       bider_max_n=max_n)


DEFAULT_BUDGETS = Budgets()


def resolve(budgets):
    return DEFAULT_BUDGETS if budgets is None else budgets
