# -*- coding: utf-8 -*-
"""Exact sparse multivariate polynomials over the variables x1, x2, ...,
y1, y2, ... and t, with arbitrary precision integer coefficients.

Terms are kept in canonical form: no zero coefficients, no zero
exponents. Two polynomials are equal exactly when their term maps are.
"""
from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple


class Family(IntEnum):
    X = 0
    Y = 1
    T = 2


class Var(NamedTuple):
    family: Family
    index: int = 0

    def __str__(self):
        if self.family is Family.T:
            return "t"
        return "%s%s" % (self.family.name.lower(), self.index)


@dataclass(frozen=True)
class Monomial(object):
    """A product of variables. ``exponents`` is a tuple of
    ``(Var, exponent)`` pairs sorted by variable, exponents positive."""
    exponents: tuple = ()

    @classmethod
    def of(cls, mapping):
        return cls(tuple(sorted((v, e) for v, e in mapping.items() if e)))

    @classmethod
    def product(cls, xs=(), ys=(), t=0):
        """x_S * y_U * t^t for index collections ``xs`` and ``ys``.
        Repeated indices give higher exponents."""
        exps = {}
        for i in xs:
            exps[Var(Family.X, i)] = exps.get(Var(Family.X, i), 0) + 1
        for i in ys:
            exps[Var(Family.Y, i)] = exps.get(Var(Family.Y, i), 0) + 1
        if t:
            exps[Var(Family.T)] = t
        return cls.of(exps)

    @property
    def degree(self):
        return sum(e for _, e in self.exponents)

    def sort_key(self):
        # graded lexicographic, highest first
        return (-self.degree, tuple((v, -e) for v, e in self.exponents))

    def __mul__(self, other):
        exps = dict(self.exponents)
        for v, e in other.exponents:
            exps[v] = exps.get(v, 0) + e
        return Monomial.of(exps)

    def exponent(self, var):
        return dict(self.exponents).get(var, 0)

    def __str__(self):
        if not self.exponents:
            return "1"
        return "*".join(str(v) if e == 1 else "%s^%s" % (v, e)
                        for v, e in self.exponents)


ONE = Monomial()


class Polynomial(object):
    """Immutable polynomial, a map from :py:class:`Monomial` to nonzero
    int. Supports ``+``, ``-``, ``*`` and ``**`` with other polynomials
    and with ints."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coef in dict(terms).items():
                if coef:
                    clean[mono] = coef
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls({ONE: c})

    @classmethod
    def monomial(cls, mono, coef=1):
        return cls({mono: coef})

    @classmethod
    def from_terms(cls, pairs):
        """Sums an iterable of ``(monomial, coefficient)`` pairs without
        building intermediate polynomials."""
        acc = {}
        for mono, coef in pairs:
            acc[mono] = acc.get(mono, 0) + coef
        return cls(acc)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, mono):
        return self._terms.get(mono, 0)

    def coefficients(self):
        return list(self._terms.values())

    def variables(self):
        return sorted(set(v for m in self._terms for v, _ in m.exponents))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for mono, coef in other._terms.items():
            acc[mono] = acc.get(mono, 0) + coef
        return Polynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers, got %r" % k)
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, mapping):
        """Replaces variables by polynomials (or ints).

        :param mapping: either a dict from :py:class:`Var` or a callable
                        taking a Var and returning a replacement or None
                        to leave it alone.
        """
        lookup = mapping if callable(mapping) else mapping.get
        result = Polynomial()
        for mono, coef in self._terms.items():
            term = Polynomial.constant(coef)
            rest = {}
            for var, e in mono.exponents:
                repl = lookup(var)
                if repl is None:
                    rest[var] = e
                else:
                    term = term * (Polynomial._coerce(repl) ** e)
            result = result + term * Polynomial.monomial(Monomial.of(rest))
        return result

    def univariate(self, var):
        """Coefficient list ``[c0, c1, ...]`` of a polynomial in the
        single variable ``var``."""
        others = [v for v in self.variables() if v != var]
        if others:
            raise ValueError("%s is not univariate in %s" % (self, var))
        if self.is_zero():
            return []
        degree = max(m.exponent(var) for m in self._terms)
        coeffs = [0] * (degree + 1)
        for mono, coef in self._terms.items():
            coeffs[mono.exponent(var)] = coef
        return coeffs

    @classmethod
    def from_univariate(cls, var, coeffs):
        return cls({Monomial.of({var: i}): c for i, c in enumerate(coeffs)})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for idx, (mono, coef) in enumerate(self.items()):
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if mono == ONE:
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = "%s*%s" % (mag, mono)
            if idx == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial(%r)" % str(self)


def x(i):
    return Polynomial.monomial(Monomial.of({Var(Family.X, i): 1}))


def y(i):
    return Polynomial.monomial(Monomial.of({Var(Family.Y, i): 1}))


def t():
    return Polynomial.monomial(Monomial.of({Var(Family.T): 1}))


T = Var(Family.T)


def specialize_exc(poly):
    """x_j -> 1, y_j -> t"""
    def lookup(var):
        if var.family is Family.X:
            return 1
        if var.family is Family.Y:
            return t()
        return None
    return poly.substitute(lookup)


def specialize_all(poly, family=Family.X):
    """Every variable of ``family`` -> t, the others -> 1."""
    def lookup(var):
        if var.family is family:
            return t()
        if var.family is Family.T:
            return None
        return 1
    return poly.substitute(lookup)
