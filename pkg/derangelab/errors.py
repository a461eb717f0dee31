# -*- coding: utf-8 -*-
"""Exceptions raised by derangelab.

Every exception carries an ``exit_status`` that the command line front
end uses as its process exit code.
"""


class DerangeLabError(Exception):
    """Base class for all errors raised by this package."""
    exit_status = 1


class UsageError(DerangeLabError):
    """Malformed command line, range, name or configuration value."""
    exit_status = 2


class BudgetExceeded(DerangeLabError):
    """An enumeration or sweep was asked for an ``n`` larger than the
    configured resource budget allows."""
    exit_status = 3

    def __init__(self, family, n, limit):
        # args must match the constructor for pickling
        super(BudgetExceeded, self).__init__(family, n, limit)
        self.family = family
        self.n = n
        self.limit = limit

    def __str__(self):
        return "n=%s exceeds the %s budget (max n is %s)" % (
            self.n, self.family, self.limit)


class DomainError(DerangeLabError, ValueError):
    """A value is not a member of the set an operation is defined on."""
    exit_status = 4


class ConsistencyError(DerangeLabError, AssertionError):
    """Something that is proven impossible happened anyway. Always a bug."""
    exit_status = 5
