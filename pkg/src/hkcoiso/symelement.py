"""
Homogeneous elements of a symmetric power S^k V.

A monomial is a sorted tuple of basis indices (a multiset), so ``(0, 0, 1)``
stands for e1^2 e2. Coefficients are Fractions; zeros are never stored.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import SpaceMismatch, DimensionMismatch
from .linalg import frac, frac_str


@lru_cache(maxsize=None)
def monomials(dim, k):
    """All degree-k monomials in `dim` symbols, graded-lex order."""
    return tuple(combinations_with_replacement(range(dim), k))


@lru_cache(maxsize=None)
def monomial_index(dim, k):
    return {m: i for i, m in enumerate(monomials(dim, k))}


def _merge(a, b):
    return tuple(sorted(a + b))


class SymElement:
    __slots__ = ("space", "degree", "coeffs")

    def __init__(self, space, degree, coeffs=None):
        self.space = space
        self.degree = degree
        clean = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(sorted(mono))
            if len(mono) != degree:
                raise ValueError(f"monomial {mono} does not have degree {degree}")
            if mono and (mono[0] < 0 or mono[-1] >= space.dim):
                raise DimensionMismatch(f"monomial {mono} outside dim {space.dim}")
            c = frac(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self.coeffs = {m: c for m, c in clean.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, space, degree):
        return cls(space, degree)

    @classmethod
    def one(cls, space):
        return cls(space, 0, {(): 1})

    @classmethod
    def linear(cls, space, vector):
        """The degree-1 element of a class vector."""
        if len(vector) != space.dim:
            raise DimensionMismatch(f"vector of length {len(vector)} in space of dim {space.dim}")
        return cls(space, 1, {(i,): x for i, x in enumerate(vector)})

    @classmethod
    def from_coords(cls, space, degree, coords):
        monos = monomials(space.dim, degree)
        if len(coords) != len(monos):
            raise DimensionMismatch("coordinate vector has wrong length")
        return cls(space, degree, dict(zip(monos, coords)))

    # -- views --------------------------------------------------------------

    def coords(self):
        """Dense coordinate vector in the monomial basis."""
        idx = monomial_index(self.space.dim, self.degree)
        v = [Fraction(0)] * len(idx)
        for m, c in self.coeffs.items():
            v[idx[m]] = c
        return v

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def to_json(self):
        """List of {monomial: exponent vector, coeff: "p/q"} in monomial order."""
        idx = monomial_index(self.space.dim, self.degree)
        out = []
        for m in sorted(self.coeffs, key=idx.__getitem__):
            exps = [0] * self.space.dim
            for i in m:
                exps[i] += 1
            out.append({"monomial": exps, "coeff": frac_str(self.coeffs[m])})
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        idx = monomial_index(self.space.dim, self.degree)
        terms = []
        for m in sorted(self.coeffs, key=idx.__getitem__):
            c = self.coeffs[m]
            mono = "*".join(
                f"e{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in sorted(Counter(m).items())
            )
            if not mono:
                terms.append(frac_str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{frac_str(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not (self.space is other.space or self.space == other.space):
            raise SpaceMismatch("elements live in different quadratic spaces")

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.space == other.space and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degree")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SymElement(self.space, self.degree, out)

    def __neg__(self):
        return SymElement(self.space, self.degree, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, t):
        t = frac(t)
        return SymElement(self.space, self.degree, {m: t * c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = SymElement.one(self.space)
        for _ in range(k):
            out = multiply(out, self)
        return out


def multiply(p, r):
    """Product S^a V x S^b V -> S^{a+b} V."""
    p._check(r)
    out = {}
    for m1, c1 in p.coeffs.items():
        for m2, c2 in r.coeffs.items():
            m = _merge(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return SymElement(p.space, p.degree + r.degree, out)


def substitute(p, images, target):
    """Pull a polynomial along a linear map of spaces.

    `images[a]` is the class vector (in `target`) of the a-th basis vector of
    p's space; the result is p with every e_a replaced by that vector.
    """
    lin = [SymElement.linear(target, v) for v in images]
    out = SymElement.zero(target, p.degree)
    cache = {}
    for m, c in p.coeffs.items():
        if m not in cache:
            t = SymElement.one(target)
            for a in m:
                t = multiply(t, lin[a])
            cache[m] = t
        out = out + cache[m].scale(c)
    return out
