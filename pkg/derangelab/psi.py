# -*- coding: utf-8 -*-
"""The sign-reversing involution on encoded derangements.

Works on DF_n, the subexcedant functions that encode derangements. The
matchless words are the fixed points; every other word has one entry
changed according to the first of four cases that applies.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import ConsistencyError, DomainError
from .permutation import Permutation, is_derangement
from .sef import (SubexcedantFunction, enumerate_derangement_sef,
                  is_derangement_sef, perm_to_sef, profile, sef_to_perm)

log = logging.getLogger(__name__)


class CaseKind(Enum):
    MATCHLESS = "matchless"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"


@dataclass(frozen=True)
class CaseLabel(object):
    kind: CaseKind
    index: Optional[int] = None

    def __str__(self):
        if self.kind is CaseKind.MATCHLESS:
            return self.kind.value
        return "%s_%s" % (self.kind.value, self.index)


MATCHLESS = CaseLabel(CaseKind.MATCHLESS)

# (case, image case, index shift) combinations the involution can produce
PERMITTED_TRANSITIONS = frozenset([
    (CaseKind.C1, CaseKind.C2, 0),
    (CaseKind.C1, CaseKind.C4, -1),
    (CaseKind.C2, CaseKind.C1, 0),
    (CaseKind.C3, CaseKind.C4, 0),
    (CaseKind.C4, CaseKind.C3, 0),
    (CaseKind.C4, CaseKind.C1, 1),
])


@dataclass(frozen=True)
class PsiTrace(object):
    input: SubexcedantFunction
    output: SubexcedantFunction
    case: CaseLabel
    image_case: CaseLabel
    touched_position: Optional[int] = None

    def to_dict(self):
        return {"input": str(self.input),
                "output": str(self.output),
                "case": str(self.case),
                "image_case": str(self.image_case),
                "touched_position": self.touched_position}


def matchless_word(n, k):
    """The word 1 1 2 3 ... k-1 k k ... k of length n."""
    if not 1 <= k <= n - 1:
        raise DomainError("matchless words need 1 <= k <= n-1, got n=%s k=%s"
                          % (n, k))
    return SubexcedantFunction(tuple(max(1, min(j - 1, k))
                                     for j in range(1, n + 1)))


def is_matchless(f):
    k = max(f.word)
    if not 1 <= k <= f.n - 1:
        return False
    return all(v == max(1, min(j - 1, k)) for j, v in enumerate(f.word, 1))


def matchless_perm(n, k):
    """The n-cycle (1 k+1 k+2 ... n k k-1 ... 2) in one-line form."""
    if not 1 <= k <= n - 1:
        raise DomainError("matchless permutations need 1 <= k <= n-1, "
                          "got n=%s k=%s" % (n, k))
    cycle = [1] + list(range(k + 1, n + 1)) + list(range(k, 1, -1))
    word = [0] * n
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        word[a - 1] = b
    return Permutation(tuple(word))


def _star(f, m, i, ones):
    """Condition shared by cases three and four at support index i
    (0-based into ``m``)."""
    mi = m[i]
    return (f(mi) < mi < m[-1] and
            ones == {1, 2} and
            f(mi + 1) == mi and
            len(f.preimage(mi)) >= 2)


def detect_case(f):
    """Finds the case that applies to ``f``.

    :returns: a ``(label, position, new_value)`` triple. For matchless
              words position and new value are ``None``.
    """
    if is_matchless(f):
        return MATCHLESS, None, None
    m = profile(f).support_sorted
    ones = f.preimage(1)
    for i in range(1, len(m)):
        mi = m[i]
        if f(mi) == mi:
            return CaseLabel(CaseKind.C1, i + 1), mi, m[i - 1]
        if f(mi) < mi and len(ones) >= 3:
            return CaseLabel(CaseKind.C2, i + 1), mi, mi
        if _star(f, m, i, ones):
            nxt = m[i + 1]
            if f(nxt) == nxt:
                return CaseLabel(CaseKind.C3, i + 1), nxt, mi
            return CaseLabel(CaseKind.C4, i + 1), nxt, nxt
    raise ConsistencyError("no case applies to non-matchless %s" % f)


def psi(f):
    """Applies the involution to ``f`` and reports which case fired.

    :type f: SubexcedantFunction
    :rtype: PsiTrace
    """
    if not is_derangement_sef(f):
        raise DomainError("%s does not encode a derangement" % f)
    case, position, value = detect_case(f)
    if case is MATCHLESS:
        return PsiTrace(f, f, MATCHLESS, MATCHLESS, None)
    out = f.replace(position, value)
    image_case = detect_case(out)[0]
    return PsiTrace(f, out, case, image_case, position)


def psi_hat(p):
    """The involution carried over to derangements through the
    subexcedant encoding."""
    if not is_derangement(p):
        raise DomainError("%s is not a derangement" % p)
    return sef_to_perm(psi(perm_to_sef(p)).output)


def case_transition_census(n, budgets=None):
    """Counts ``(case kind, image kind, index shift)`` over DF_n.
    Matchless words are counted under ``(MATCHLESS, MATCHLESS, 0)``."""
    census = Counter()
    for f in enumerate_derangement_sef(n, budgets):
        trace = psi(f)
        if trace.case is MATCHLESS:
            census[(CaseKind.MATCHLESS, CaseKind.MATCHLESS, 0)] += 1
        else:
            shift = trace.image_case.index - trace.case.index
            census[(trace.case.kind, trace.image_case.kind, shift)] += 1
    log.debug("case census n=%s: %s", n, dict(census))
    return census
