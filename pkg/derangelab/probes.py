# -*- coding: utf-8 -*-
"""Exploratory computations around open questions and observed
patterns. Nothing in here asserts; every function returns a report
that says what was found."""
import logging
from dataclasses import dataclass
from typing import Optional

from . import budget as _budget
from .biderangement import enumerate_biderangements
from .errors import DomainError
from .involutions import decisive_census
from .permutation import (enumerate_derangements, enumerate_sn,
                          enumerate_with_fixed, stats)
from .polynomial import Monomial, Polynomial, T
from .psi import PERMITTED_TRANSITIONS, CaseKind, case_transition_census

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TypeRestrictedReport(object):
    n: int
    k: int
    polynomial: Polynomial
    raw_nonnegative: bool
    normalized_nonnegative: bool

    @property
    def all_coeffs_nonneg(self):
        return self.normalized_nonnegative

    def to_dict(self):
        return {"probe": "conjecture", "n": self.n, "k": self.k,
                "terms": len(self.polynomial),
                "raw_nonnegative": self.raw_nonnegative,
                "normalized_nonnegative": self.normalized_nonnegative}


def type_restricted_sum(n, k, budgets=None):
    """Signed sum of x_RLMv * y_EXCv over permutations of [n] whose
    cycles all have length at least ``k``. Nonnegativity is reported
    both as computed and after multiplying by (-1)^(n-1)."""
    if not 1 <= k <= n:
        raise DomainError("need 1 <= k <= n, got n=%s k=%s" % (n, k))
    budgets = _budget.resolve(budgets)
    budgets.check(_budget.SWEEP, n)
    poly = Polynomial.from_terms(
        (Monomial.product(xs=r.rlm_val, ys=r.exc_val), r.sign)
        for r in (stats(p) for p in enumerate_sn(n, budgets))
        if r.cycle_type[-1] >= k)
    sign = -1 if (n - 1) % 2 else 1
    return TypeRestrictedReport(
        n, k, poly,
        raw_nonnegative=all(c >= 0 for c in poly.coefficients()),
        normalized_nonnegative=all(sign * c >= 0 for c in poly.coefficients()))


def single_cycle_census(n, budgets=None):
    """Sum of x_RLMv * y_EXCv over the n-cycles of [n], with the number
    of distinct monomials in it."""
    budgets = _budget.resolve(budgets)
    budgets.check(_budget.SWEEP, n)
    poly = Polynomial.from_terms(
        (Monomial.product(xs=r.rlm_val, ys=r.exc_val), 1)
        for r in (stats(p) for p in enumerate_sn(n, budgets))
        if r.cycle_type == (n,))
    return poly, len(poly)


@dataclass(frozen=True)
class RlmTable(object):
    """a[n][k] is the number of derangements of [n] with k right-to-left
    minima, for 2 <= n <= max_n and 1 <= k <= n-1."""
    max_n: int
    rows: dict

    def a(self, n, k):
        row = self.rows.get(n)
        if row is None or not 1 <= k <= len(row):
            return 0
        return row[k - 1]

    def first_column_checks(self):
        """a(n,1) against (n-2) a(n-1,1) + (n-3) a(n-2,1), n >= 4."""
        checks = []
        for n in range(4, self.max_n + 1):
            predicted = ((n - 2) * self.a(n - 1, 1) +
                         (n - 3) * self.a(n - 2, 1))
            checks.append((n, self.a(n, 1), predicted,
                           self.a(n, 1) == predicted))
        return checks

    def diagonal_checks(self):
        """(n-2) + (n-1)^2 against a(n, n-1) and, one row further
        down, against a(n+1, n-1)."""
        checks = []
        for n in range(2, self.max_n + 1):
            formula = (n - 2) + (n - 1) ** 2
            literal = self.a(n, n - 1)
            shifted = self.a(n + 1, n - 1) if n + 1 <= self.max_n else None
            checks.append({"n": n, "formula": formula,
                           "literal": literal,
                           "literal_holds": literal == formula,
                           "shifted": shifted,
                           "shifted_holds": None if shifted is None
                           else shifted == formula})
        return checks


def rlm_derangement_table(max_n, budgets=None):
    budgets = _budget.resolve(budgets)
    budgets.check(_budget.SWEEP, max_n)
    rows = {}
    for n in range(2, max_n + 1):
        row = [0] * (n - 1)
        for p in enumerate_derangements(n, budgets):
            row[stats(p).rlm - 1] += 1
        rows[n] = tuple(row)
        log.debug("rlm table row %s: %s", n, rows[n])
    return RlmTable(max_n, rows)


def _divide_linear(coeffs, root):
    """Synthetic division of sum c_i t^i by (t - root). Returns
    ``(quotient, remainder)``; coefficient lists are lowest degree
    first."""
    if len(coeffs) < 2:
        return [], coeffs[0] if coeffs else 0
    quotient = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + root * carry
        quotient[i - 1] = carry
    return quotient, coeffs[0] + root * carry


def factor_sign_t_pm(poly):
    """Writes ``poly`` as sign * t^a * (t+1)^b * (t-1)^c if possible.

    :returns: ``(sign, a, b, c)`` or None
    """
    if poly.is_zero():
        return None
    coeffs = poly.univariate(T)
    a = 0
    while coeffs[a] == 0:
        a += 1
    coeffs = coeffs[a:]
    exponents = {}
    for root in (1, -1):
        count = 0
        while len(coeffs) > 1:
            quotient, remainder = _divide_linear(coeffs, root)
            if remainder:
                break
            coeffs = quotient
            count += 1
        exponents[root] = count
    if len(coeffs) != 1 or coeffs[0] not in (1, -1):
        return None
    return coeffs[0], a, exponents[-1], exponents[1]


@dataclass(frozen=True)
class FixedRlmReport(object):
    n: int
    fixed: tuple
    polynomial: Polynomial
    factored: Optional[tuple]

    @property
    def is_zero(self):
        return self.polynomial.is_zero()

    def to_dict(self):
        form = None
        if self.factored:
            sign, a, b, c = self.factored
            form = {"sign": sign, "a": a, "b": b, "c": c}
        return {"probe": "fix-rlm-probe", "n": self.n, "T": list(self.fixed),
                "polynomial": str(self.polynomial), "zero": self.is_zero,
                "factored": form}


def fixed_rlm_probe(n, fixed, budgets=None):
    """Signed sum of t^rlm over permutations fixing every point of
    ``fixed``, and its factorization as +-t^a (t+1)^b (t-1)^c when one
    exists."""
    budgets = _budget.resolve(budgets)
    budgets.check(_budget.SWEEP, n)
    poly = Polynomial.from_terms(
        (Monomial.product(t=r.rlm), r.sign)
        for r in (stats(p) for p in enumerate_with_fixed(n, fixed, budgets)))
    return FixedRlmReport(n, tuple(sorted(fixed)), poly,
                          factor_sign_t_pm(poly))


def case_transition_rows(max_n, budgets=None):
    """Rows ``(n, case, image_case, shift, count, permitted)`` of the
    case census for 2 <= n <= max_n."""
    _budget.resolve(budgets).check(_budget.SWEEP, max_n)
    rows = []
    for n in range(2, max_n + 1):
        census = case_transition_census(n, budgets)
        for (case, image, shift), count in sorted(
                census.items(), key=lambda kv: (kv[0][0].value, kv[0][1].value,
                                                kv[0][2])):
            permitted = (case is CaseKind.MATCHLESS or
                         (case, image, shift) in PERMITTED_TRANSITIONS)
            rows.append((n, case.value, image.value, shift, count, permitted))
    return rows


def decisive_rows(max_n, budgets=None):
    """Rows ``(n, k, count, sign)``; sign is 0 if the decisive
    permutations with k right-to-left minima do not share one."""
    _budget.resolve(budgets).check(_budget.SWEEP, max_n)
    rows = []
    for n in range(1, max_n + 1):
        census = decisive_census(n, budgets)
        for k in sorted(census):
            signs = census[k]
            sign = next(iter(signs)) if len(signs) == 1 else 0
            rows.append((n, k, sum(signs.values()), sign))
    return rows


def bider_counts(max_n, budgets=None):
    return [(n, sum(1 for _ in enumerate_biderangements(n, budgets)))
            for n in range(1, max_n + 1)]


def single_cycle_counts(max_n, budgets=None):
    return [(n, single_cycle_census(n, budgets)[1])
            for n in range(1, max_n + 1)]
