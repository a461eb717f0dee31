# -*- coding: utf-8 -*-
"""Subexcedant functions and their bijection with permutations.

A subexcedant function on [n] is a word f(1)...f(n) with
``1 <= f(i) <= i``. The word f encodes the permutation obtained by
composing the transpositions (n f(n)) ... (2 f(2)) (1 f(1)), rightmost
first.
"""
import itertools
from dataclasses import dataclass

from . import budget as _budget
from .errors import DomainError
from .permutation import Permutation, rlm_positions
from .words import format_word, parse_word


@dataclass(frozen=True)
class SubexcedantFunction(object):
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise DomainError("a subexcedant function needs n >= 1")
        for i, v in enumerate(word, 1):
            if not 1 <= v <= i:
                raise DomainError("%s is not subexcedant: f(%s)=%s" %
                                  (format_word(word), i, v))

    @classmethod
    def parse(cls, text):
        return cls(parse_word(text))

    @property
    def n(self):
        return len(self.word)

    def __call__(self, i):
        return self.word[i - 1]

    def __str__(self):
        return format_word(self.word)

    def replace(self, position, value):
        """Copy of this function with f(position) set to value."""
        word = list(self.word)
        word[position - 1] = value
        return SubexcedantFunction(tuple(word))

    def preimage(self, value):
        return frozenset(i for i, v in enumerate(self.word, 1) if v == value)


@dataclass(frozen=True)
class SefProfile(object):
    support: frozenset
    aexc: int
    fixed_points: frozenset
    multiple_fixed_points: frozenset
    rlm_idx: frozenset
    rlm_val: frozenset

    @property
    def support_sorted(self):
        """The support as m_1 < m_2 < ... < m_l."""
        return tuple(sorted(self.support))


def _swap_values(word, a, b):
    if a == b:
        return
    ia = word.index(a)
    ib = word.index(b)
    word[ia], word[ib] = b, a


def sef_to_perm(f):
    """
    :type f: SubexcedantFunction
    :rtype: Permutation
    """
    word = list(range(1, f.n + 1))
    # left-composing (i f(i)) swaps the two values wherever they sit
    for i, v in enumerate(f.word, 1):
        _swap_values(word, i, v)
    return Permutation(tuple(word))


def perm_to_sef_steps(p):
    """The chain of permutations visited while decoding ``p``: first
    ``p`` itself on [n], then ``(n p(n)) o p`` restricted to [n-1], and
    so on down to [1]. Returned as a list of one-line words."""
    word = list(p.word)
    steps = []
    for m in range(p.n, 0, -1):
        steps.append(tuple(word[:m]))
        _swap_values(word, m, word[m - 1])
    return steps


def perm_to_sef(p):
    """Inverse of :py:func:`sef_to_perm`.

    :type p: Permutation
    :rtype: SubexcedantFunction
    """
    word = list(p.word)
    f = [0] * p.n
    for m in range(p.n, 0, -1):
        v = word[m - 1]
        f[m - 1] = v
        _swap_values(word, m, v)
    return SubexcedantFunction(tuple(f))


def profile(f):
    word = f.word
    fixed = frozenset(i for i, v in enumerate(word, 1) if v == i)
    multiple = frozenset(i for i in fixed if any(v == i for v in word[i:]))
    rlm_idx = rlm_positions(word)
    return SefProfile(support=frozenset(word),
                      aexc=sum(1 for i, v in enumerate(word, 1) if v < i),
                      fixed_points=fixed,
                      multiple_fixed_points=multiple,
                      rlm_idx=rlm_idx,
                      rlm_val=frozenset(word[i - 1] for i in rlm_idx))


def is_derangement_sef(f):
    """True iff every fixed point of ``f`` is a multiple fixed point,
    which is exactly when ``f`` encodes a derangement."""
    prof = profile(f)
    return prof.fixed_points == prof.multiple_fixed_points


def enumerate_sef(n, budgets=None):
    _budget.resolve(budgets).check(_budget.PERM, n)
    ranges = [range(1, i + 1) for i in range(1, n + 1)]
    return (SubexcedantFunction(w) for w in itertools.product(*ranges))


def enumerate_derangement_sef(n, budgets=None):
    """The set DF_n, lexicographically."""
    return (f for f in enumerate_sef(n, budgets) if is_derangement_sef(f))
