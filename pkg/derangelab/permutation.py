# -*- coding: utf-8 -*-
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from . import budget as _budget
from .errors import DomainError
from .words import format_word, parse_word

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation(object):
    """A permutation of [n] in one-line notation. Positions and values
    are 1-based: ``word[i - 1]`` is the image of ``i``."""
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise DomainError("a permutation needs n >= 1")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise DomainError("%s is not a permutation of [%s]" %
                              (format_word(word), len(word)))

    @classmethod
    def parse(cls, text):
        return cls(parse_word(text))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self):
        return len(self.word)

    def __call__(self, i):
        return self.word[i - 1]

    def __str__(self):
        return format_word(self.word)

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycles(self):
        """Disjoint cycles, each starting at its smallest element, in
        order of that element. Fixed points are 1-cycles."""
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.word[start - 1]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.word[nxt - 1]
            result.append(tuple(cycle))
        return result


@dataclass(frozen=True)
class StatReport(object):
    inv: int
    sign: int
    exc_idx: frozenset
    exc_val: frozenset
    rlm_idx: frozenset
    rlm_val: frozenset
    fix: frozenset
    cycle_type: tuple

    @property
    def exc(self):
        return len(self.exc_idx)

    @property
    def rlm(self):
        return len(self.rlm_idx)

    @property
    def fix_count(self):
        return len(self.fix)

    @property
    def cycle_count(self):
        return len(self.cycle_type)

    def to_dict(self):
        return {"inv": self.inv,
                "sign": self.sign,
                "exc_idx": sorted(self.exc_idx),
                "exc_val": sorted(self.exc_val),
                "rlm_idx": sorted(self.rlm_idx),
                "rlm_val": sorted(self.rlm_val),
                "fix": sorted(self.fix),
                "cycle_type": list(self.cycle_type)}


def inversions(word):
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n)
               if word[i] > word[j])


def rlm_positions(word):
    """1-based positions i with word(i) < word(j) for every j > i."""
    positions = []
    current = None
    for i in range(len(word), 0, -1):
        v = word[i - 1]
        if current is None or v < current:
            positions.append(i)
            current = v
    return frozenset(positions)


def stats(p):
    """Computes every statistic of ``p`` in one pass.

    :type p: Permutation
    :rtype: StatReport
    """
    w = p.word
    inv = inversions(w)
    exc_idx = frozenset(i for i, v in enumerate(w, 1) if v > i)
    rlm_idx = rlm_positions(w)
    cycle_type = tuple(sorted((len(c) for c in p.cycles()), reverse=True))
    return StatReport(inv=inv,
                      sign=-1 if inv % 2 else 1,
                      exc_idx=exc_idx,
                      exc_val=frozenset(w[i - 1] for i in exc_idx),
                      rlm_idx=rlm_idx,
                      rlm_val=frozenset(w[i - 1] for i in rlm_idx),
                      fix=frozenset(i for i, v in enumerate(w, 1) if v == i),
                      cycle_type=cycle_type)


def is_derangement(p):
    return all(v != i for i, v in enumerate(p.word, 1))


def enumerate_sn(n, budgets=None):
    """All of S_n in lexicographic order."""
    _budget.resolve(budgets).check(_budget.PERM, n)
    return (Permutation(w) for w in itertools.permutations(range(1, n + 1)))


def enumerate_derangements(n, budgets=None):
    """All derangements of [n] in lexicographic order."""
    _budget.resolve(budgets).check(_budget.PERM, n)
    return _derangements(n)


def _derangements(n):
    word = [0] * n
    used = [False] * (n + 1)

    def extend(pos):
        if pos > n:
            yield Permutation(tuple(word))
            return
        for v in range(1, n + 1):
            if used[v] or v == pos:
                continue
            used[v] = True
            word[pos - 1] = v
            yield from extend(pos + 1)
            used[v] = False

    return extend(1)


def enumerate_with_fixed(n, fixed, budgets=None):
    """Permutations of [n] whose fixed point set contains ``fixed``,
    lexicographically.

    :param fixed: positions that must be fixed points
    :type fixed: set
    """
    _budget.resolve(budgets).check(_budget.PERM, n)
    fixed = frozenset(fixed)
    if not fixed <= frozenset(range(1, n + 1)):
        raise DomainError("%s is not a subset of [%s]" % (sorted(fixed), n))
    return _with_fixed(n, fixed)


def _with_fixed(n, fixed):
    free = [i for i in range(1, n + 1) if i not in fixed]
    # the fixed positions are the same in every word, so lexicographic
    # order of the free part is lexicographic order of the whole word
    for images in itertools.permutations(free):
        word = list(range(1, n + 1))
        for pos, v in zip(free, images):
            word[pos - 1] = v
        yield Permutation(tuple(word))


@lru_cache(maxsize=None)
def stirling_first(n, k):
    """Unsigned Stirling number of the first kind c(n, k)."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return stirling_first(n - 1, k - 1) + (n - 1) * stirling_first(n - 1, k)
