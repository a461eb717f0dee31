# -*- coding: utf-8 -*-
"""Reading and writing words in one-line notation.

Words whose letters are all single digits are written without
separators (``2135764``), anything else comma separated (``10,1,2``).
"""
import re

from .errors import DomainError

_comma_re = re.compile(r"^\d+(\s*,\s*\d+)*$")
_digits_re = re.compile(r"^\d+$")


def format_word(word):
    if not word:
        return ""
    if max(word) <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def parse_word(text):
    """Parses ``text`` into a tuple of positive integers.

    :param text: a word like ``"612935487"`` or ``"10,1,2"``
    :type text: str
    :rtype: tuple
    """
    text = text.strip()
    if "," in text:
        if not _comma_re.match(text):
            raise DomainError("cannot parse word %r" % text)
        word = tuple(int(x) for x in text.split(","))
    elif _digits_re.match(text):
        word = tuple(int(c) for c in text)
    else:
        raise DomainError("cannot parse word %r" % text)
    if 0 in word:
        raise DomainError("word %r contains 0; letters are 1-based" % text)
    return word
