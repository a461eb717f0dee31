# -*- coding: utf-8 -*-
from collections import Counter
from dataclasses import dataclass

from . import budget as _budget
from .errors import DomainError
from .permutation import inversions
from .words import format_word, parse_word


def doubled_identity(n):
    """B_n = 1 1 2 2 ... n n"""
    return tuple(v for v in range(1, n + 1) for _ in (0, 1))


@dataclass(frozen=True)
class Biderangement(object):
    """A word over {1,1,2,2,...,n,n} that differs from B_n at every
    position."""
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word or len(word) % 2:
            raise DomainError("a biderangement has even, nonzero length")
        n = len(word) // 2
        counts = Counter(word)
        if set(counts) != set(range(1, n + 1)) or \
           any(c != 2 for c in counts.values()):
            raise DomainError("%s does not use each of 1..%s twice" %
                              (format_word(word), n))
        for j, (v, b) in enumerate(zip(word, doubled_identity(n)), 1):
            if v == b:
                raise DomainError("%s agrees with B_%s at position %s" %
                                  (format_word(word), n, j))

    @classmethod
    def parse(cls, text):
        return cls(parse_word(text))

    @property
    def n(self):
        return len(self.word) // 2

    def __str__(self):
        return format_word(self.word)


@dataclass(frozen=True)
class WordStats(object):
    inv: int
    exc_val: tuple  # multiset, sorted
    rlm_val: frozenset

    def to_dict(self):
        return {"inv": self.inv, "exc_val": list(self.exc_val),
                "rlm_val": sorted(self.rlm_val)}


def word_stats(w):
    """Inversions, the excedance value multiset and the right-to-left
    minimum values of a biderangement. A right-to-left minimum is a
    letter strictly smaller than every letter to its right, so a value
    appears in ``rlm_val`` at most once."""
    word = w.word
    base = doubled_identity(w.n)
    exc = tuple(sorted(v for v, b in zip(word, base) if v > b))
    rlm = set()
    current = None
    for v in reversed(word):
        if current is None or v < current:
            rlm.add(v)
            current = v
    return WordStats(inv=inversions(word), exc_val=exc,
                     rlm_val=frozenset(rlm))


def enumerate_biderangements(n, budgets=None):
    """All biderangements of B_n in lexicographic order."""
    _budget.resolve(budgets).check(_budget.BIDER, n)
    return _biderangements(n)


def _biderangements(n):
    base = doubled_identity(n)
    size = 2 * n
    left = [0] + [2] * n
    word = [0] * size

    def extend(pos):
        if pos == size:
            yield Biderangement(tuple(word))
            return
        for v in range(1, n + 1):
            if not left[v] or v == base[pos]:
                continue
            left[v] -= 1
            word[pos] = v
            yield from extend(pos + 1)
            left[v] += 1

    return extend(0)
