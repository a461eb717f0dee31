# -*- coding: utf-8 -*-
"""Brute force certification of the signed generating function
identities.

Each verifier folds one side of an identity over every permutation (or
biderangement) of the given size, builds the closed form for the other
side and compares the two polynomials exactly.
"""
import itertools
import logging
import time
from dataclasses import dataclass, field
from math import comb

from . import budget as _budget
from .biderangement import enumerate_biderangements, word_stats
from .errors import DomainError
from .permutation import (enumerate_derangements, enumerate_sn,
                          enumerate_with_fixed, stats, stirling_first)
from .polynomial import Monomial, Polynomial, T, x

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationResult(object):
    identity: str
    n: int
    lhs: Polynomial
    rhs: Polynomial
    elapsed: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def equal(self):
        return self.lhs == self.rhs

    @property
    def first_discrepancy(self):
        """``(monomial, lhs coefficient, rhs coefficient)`` for the first
        differing term in canonical order, or None."""
        diff = self.lhs - self.rhs
        if diff.is_zero():
            return None
        mono = diff.items()[0][0]
        return mono, self.lhs.coefficient(mono), self.rhs.coefficient(mono)

    def to_dict(self, timings=False):
        d = {"identity": self.identity,
             "n": self.n}
        d.update(self.params)
        disc = self.first_discrepancy
        d.update({"equal": self.equal,
                  "lhs_terms": len(self.lhs),
                  "rhs_terms": len(self.rhs),
                  "first_discrepancy": None if disc is None else {
                      "monomial": str(disc[0]), "lhs": disc[1], "rhs": disc[2]},
                  "elapsed_ms": round(self.elapsed * 1000, 3) if timings else None})
        return d


def _finish(name, n, started, lhs, rhs, **params):
    result = VerificationResult(name, n, lhs, rhs,
                                elapsed=time.perf_counter() - started,
                                params=params)
    log.debug("%s n=%s: equal=%s (%d/%d terms, %.1f ms)", name, n,
              result.equal, len(lhs), len(rhs), result.elapsed * 1000)
    return result


def _sweep(n, budgets):
    budgets = _budget.resolve(budgets)
    budgets.check(_budget.SWEEP, n)
    return budgets


def _sign_power(n):
    return -1 if (n - 1) % 2 else 1


def main_theorem_values(n, budgets=None):
    """sum over D_n of sgn * x_RLMv * y_EXCv against
    (-1)^(n-1) * sum_j x1...xj * y(j+1)...yn"""
    if n < 2:
        raise DomainError("main-values needs n >= 2, got %s" % n)
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(xs=r.rlm_val, ys=r.exc_val), r.sign)
        for r in (stats(p) for p in enumerate_derangements(n, budgets)))
    rhs = Polynomial.from_terms(
        (Monomial.product(xs=range(1, j + 1), ys=range(j + 1, n + 1)),
         _sign_power(n))
        for j in range(1, n))
    return _finish("main-values", n, started, lhs, rhs)


def main_theorem_indices(n, budgets=None):
    """The same identity with positions instead of values:
    x_RLMi * y_EXCi against (-1)^(n-1) * sum_j y1...yj * x(j+1)...xn"""
    if n < 2:
        raise DomainError("main-indices needs n >= 2, got %s" % n)
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(xs=r.rlm_idx, ys=r.exc_idx), r.sign)
        for r in (stats(p) for p in enumerate_derangements(n, budgets)))
    rhs = Polynomial.from_terms(
        (Monomial.product(ys=range(1, j + 1), xs=range(j + 1, n + 1)),
         _sign_power(n))
        for j in range(1, n))
    return _finish("main-indices", n, started, lhs, rhs)


def mr_counting(n, k, budgets=None):
    """Even minus odd derangements of [n] with exactly ``k`` excedances.
    Always (-1)^(n-1)."""
    if n < 1 or not 1 <= k <= n - 1:
        raise DomainError("mr-count needs 1 <= k <= n-1, got n=%s k=%s"
                          % (n, k))
    budgets = _sweep(n, budgets)
    total = 0
    for p in enumerate_derangements(n, budgets):
        r = stats(p)
        if r.exc == k:
            total += r.sign
    return total


def exc_sum_sn(n, budgets=None):
    """sum over S_n of sgn * x_EXCi = prod_{j<n} (1 - x_j)"""
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(xs=r.exc_idx), r.sign)
        for r in (stats(p) for p in enumerate_sn(n, budgets)))
    rhs = Polynomial.constant(1)
    for j in range(1, n):
        rhs = rhs * (1 - x(j))
    return _finish("exc-sn", n, started, lhs, rhs)


def exc_sum_fixed(n, fixed, budgets=None):
    """The excedance sum restricted to permutations fixing every point
    of ``fixed``. With m the largest integer of [n] outside ``fixed``
    and E = [m-1] minus ``fixed`` the sum is prod_{j in E} (1 - x_j)."""
    budgets = _sweep(n, budgets)
    fixed = frozenset(fixed)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(xs=r.exc_idx), r.sign)
        for r in (stats(p) for p in enumerate_with_fixed(n, fixed, budgets)))
    rhs = Polynomial.constant(1)
    free = [i for i in range(1, n + 1) if i not in fixed]
    if free:
        m = max(free)
        for j in range(1, m):
            if j not in fixed:
                rhs = rhs * (1 - x(j))
    return _finish("exc-fixed", n, started, lhs, rhs, T=sorted(fixed))


def derangement_exc_mono(n, budgets=None):
    """sum over D_n of sgn * x_EXCi = (-1)^(n-1) * sum_j x1...xj"""
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(xs=r.exc_idx), r.sign)
        for r in (stats(p) for p in enumerate_derangements(n, budgets)))
    rhs = Polynomial.from_terms(
        (Monomial.product(xs=range(1, j + 1)), _sign_power(n))
        for j in range(1, n))
    return _finish("der-exc", n, started, lhs, rhs)


def rlm_sum_sn(n, budgets=None):
    """sum over S_n of sgn * x_RLMv
    = prod_{i odd} x_i * prod_{j even} (x_j - 1)"""
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(xs=r.rlm_val), r.sign)
        for r in (stats(p) for p in enumerate_sn(n, budgets)))
    rhs = Polynomial.constant(1)
    for i in range(1, n + 1):
        rhs = rhs * (x(i) if i % 2 else x(i) - 1)
    return _finish("rlm-sn", n, started, lhs, rhs)


def rlm_signed_counts(n, budgets=None):
    """Maps k to ``(signed count of rlm = k, expected)`` where the
    expected value is (-1)^(n-k) * C(floor(n/2), k - ceil(n/2))."""
    budgets = _sweep(n, budgets)
    counts = dict.fromkeys(range(1, n + 1), 0)
    for p in enumerate_sn(n, budgets):
        r = stats(p)
        counts[r.rlm] += r.sign
    half_down, half_up = n // 2, (n + 1) // 2
    result = {}
    for k, got in counts.items():
        lower = k - half_up
        expected = 0
        if 0 <= lower <= half_down:
            expected = (-1) ** (n - k) * comb(half_down, lower)
        result[k] = (got, expected)
    return result


def rlm_derangement_sum(n, budgets=None):
    """sum over D_n of sgn * t^rlm = (-1)^(n-1) (t + t^2 + ... + t^(n-1))"""
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(t=r.rlm), r.sign)
        for r in (stats(p) for p in enumerate_derangements(n, budgets)))
    rhs = Polynomial.from_terms(
        (Monomial.product(t=j), _sign_power(n)) for j in range(1, n))
    return _finish("rlm-der", n, started, lhs, rhs)


def biderangement_identity(n, budgets=None):
    """Signed sum over biderangements of x_EXCv * y_RLMv against the
    unsigned sum over D_n with every excedance value squared."""
    budgets = _budget.resolve(budgets)
    budgets.check(_budget.BIDER, n)
    started = time.perf_counter()
    lhs_terms = []
    for w in enumerate_biderangements(n, budgets):
        s = word_stats(w)
        lhs_terms.append((Monomial.product(xs=s.exc_val, ys=s.rlm_val),
                          -1 if s.inv % 2 else 1))
    lhs = Polynomial.from_terms(lhs_terms)
    rhs = Polynomial.from_terms(
        (Monomial.product(xs=[v for v in r.exc_val for _ in (0, 1)],
                          ys=r.rlm_val), 1)
        for r in (stats(p) for p in enumerate_derangements(n, budgets)))
    return _finish("bider", n, started, lhs, rhs)


def chapman_count(n, budgets=None):
    """Even minus odd derangements of [n] is (-1)^(n-1) (n-1)."""
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    total = sum(stats(p).sign for p in enumerate_derangements(n, budgets))
    return _finish("chapman", n, started, Polynomial.constant(total),
                   Polynomial.constant(_sign_power(n) * (n - 1)))


def stirling_check(n, budgets=None):
    """sum over S_n of t^rlm against sum_k c(n,k) t^k."""
    budgets = _sweep(n, budgets)
    started = time.perf_counter()
    lhs = Polynomial.from_terms(
        (Monomial.product(t=stats(p).rlm), 1) for p in enumerate_sn(n, budgets))
    rhs = Polynomial.from_univariate(
        T, [stirling_first(n, k) for k in range(n + 1)])
    return _finish("stirling", n, started, lhs, rhs)


def signed_exc_polynomial(n, budgets=None):
    """sum over D_n of sgn * t^exc"""
    budgets = _sweep(n, budgets)
    return Polynomial.from_terms(
        (Monomial.product(t=r.exc), r.sign)
        for r in (stats(p) for p in enumerate_derangements(n, budgets)))


def subsets_lex(n, limit=None):
    """Subsets of [n] as increasing tuples in lexicographic order,
    starting with the empty set."""
    subsets = sorted(c for size in range(n + 1)
                     for c in itertools.combinations(range(1, n + 1), size))
    return subsets if limit is None else subsets[:limit]
