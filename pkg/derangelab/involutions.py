# -*- coding: utf-8 -*-
"""Sign-reversing involutions on permutations and biderangements.

``iota`` pairs up permutations sharing an excedance set, ``kappa`` pairs
up permutations sharing a right-to-left minimum value set, ``zeta`` is
a sign-preserving symmetry of the derangements and ``beta`` pairs up
biderangements.
"""
import logging
from collections import Counter
from dataclasses import dataclass

from .biderangement import Biderangement
from .errors import ConsistencyError, DomainError
from .permutation import Permutation, enumerate_sn, rlm_positions, stats

log = logging.getLogger(__name__)


def _swapped(word, a, b):
    w = list(word)
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def _iota_pair(p):
    """The lexicographically largest pair (l, m), 2 <= l < m, whose
    swap keeps the excedance set, or None."""
    w = p.word
    n = p.n
    for l in range(n - 1, 1, -1):
        wl = w[l - 1]
        for m in range(n, l, -1):
            wm = w[m - 1]
            if wl > l and wm > m:
                if wl > m:
                    return l, m
            elif wl <= l and wm <= m:
                if wm <= l:
                    return l, m
    return None


def iota(p):
    pair = _iota_pair(p)
    if pair is None:
        return p
    return Permutation(_swapped(p.word, *pair))


def _chains_hold(p):
    w = p.word
    n = p.n
    exc = [i for i in range(1, n + 1) if w[i - 1] > i]
    rest = [i for i in range(1, n + 1) if w[i - 1] <= i]
    # j1 < p(j1) <= j2 < p(j2) <= ... <= jk < p(jk)
    for a, b in zip(exc, exc[1:]):
        if w[a - 1] > b:
            return False
    # p(i1) <= i1 < p(i2) <= i2 < ... < p(i_last) <= i_last = n
    for a, b in zip(rest, rest[1:]):
        if w[b - 1] <= a:
            return False
    return not rest or rest[-1] == n


def is_critical(p):
    """True if ``p`` is a fixed point of :py:func:`iota`. Checked both
    by the interleaving chain criterion and by running ``iota``; if the
    two ever disagree a ConsistencyError is raised."""
    by_chain = _chains_hold(p)
    by_iota = _iota_pair(p) is None
    if by_chain != by_iota:
        raise ConsistencyError("criticality of %s: chains say %s, iota says %s"
                               % (p, by_chain, by_iota))
    return by_iota


def pi_E(n, excedances):
    """The critical permutation of [n] whose excedance set is
    ``excedances``."""
    e = frozenset(excedances)
    if not e <= frozenset(range(1, n)):
        raise DomainError("%s is not a subset of [%s]" % (sorted(e), n - 1))
    word = [0] * n
    previous = 0
    for i in range(1, n + 1):
        if i in e:
            word[i - 1] = i + 1
        else:
            word[i - 1] = previous + 1
            previous = i
    return Permutation(tuple(word))


def flip(p):
    """k -> n+1-p(k)"""
    return Permutation(tuple(p.n + 1 - v for v in p.word))


def zeta(p):
    """flip^-1 o inverse o flip, i.e. k -> n+1-p^-1(n+1-k)."""
    return flip(flip(p).inverse())


def kappa(p):
    """Swaps positions i, i+1 for the smallest odd i where that keeps
    the set of right-to-left minimum values."""
    w = p.word
    target = frozenset(w[i - 1] for i in rlm_positions(w))
    for i in range(1, p.n, 2):
        candidate = _swapped(w, i, i + 1)
        if frozenset(candidate[j - 1] for j in rlm_positions(candidate)) == target:
            return Permutation(candidate)
    return p


def is_decisive(p):
    return kappa(p) == p


def decisive_from_T(n, evens):
    """The decisive permutation whose right-to-left minimum values are
    the odd numbers of [n] together with ``evens``."""
    t = frozenset(evens)
    bad = [v for v in t if v % 2 or not 1 <= v <= n]
    if bad:
        raise DomainError("%s are not even values in [%s]" % (sorted(bad), n))
    word = []
    for j in range(1, n, 2):
        word.extend((j, j + 1) if j + 1 in t else (j + 1, j))
    if n % 2:
        word.append(n)
    return Permutation(tuple(word))


def beta(w):
    """Swaps w(j), w(j+1) at the smallest odd j where they differ."""
    word = w.word
    for j in range(0, len(word), 2):
        if word[j] != word[j + 1]:
            swapped = list(word)
            swapped[j], swapped[j + 1] = word[j + 1], word[j]
            return Biderangement(tuple(swapped))
    return w


@dataclass(frozen=True)
class CriticalCensus(object):
    n: int
    k: int
    even: int
    odd: int
    critical: tuple

    def to_dict(self):
        return {"n": self.n, "k": self.k, "even": self.even, "odd": self.odd,
                "critical": [str(p) for p in self.critical]}


def critical_census(n, k, budgets=None):
    """Even and odd permutations of [n] with ``k`` excedances, and the
    critical ones among them."""
    even = odd = 0
    critical = []
    for p in enumerate_sn(n, budgets):
        report = stats(p)
        if report.exc != k:
            continue
        if report.sign > 0:
            even += 1
        else:
            odd += 1
        if is_critical(p):
            critical.append(p)
    return CriticalCensus(n, k, even, odd, tuple(critical))


def decisive_census(n, budgets=None):
    """Maps each rlm count to ``Counter`` of signs over the decisive
    permutations of [n]."""
    census = {}
    for p in enumerate_sn(n, budgets):
        if not is_decisive(p):
            continue
        report = stats(p)
        census.setdefault(report.rlm, Counter())[report.sign] += 1
    log.debug("decisive census n=%s: %s", n, census)
    return census
