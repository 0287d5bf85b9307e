"""
Rational quadratic spaces (V, q): Gram data, the pairing, splitting off a
nondegenerate Neron-Severi part, the dual class c in S^2 V and rational
points on the isotropic quadric.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from functools import reduce
import random
import warnings

from .errors import (
    NonSymmetric, Degenerate, DegenerateNS, NotIndependent, DimensionMismatch,
    NoIsotropicVector, NotIsotropic,
)
from .linalg import frac, frac_str, inverse, det, nullspace, rank
from .symelement import SymElement, multiply

ClassVector = tuple


class QuadraticSpace:
    """A finite-dimensional Q-vector space with a nondegenerate symmetric form.

    The basis is the standard one; vectors are tuples of Fractions.
    """

    def __init__(self, gram, name=None):
        rows = [tuple(frac(x) for x in row) for row in gram]
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise DimensionMismatch("Gram matrix must be square and nonempty")
        for i in range(d):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise NonSymmetric(f"gram[{i}][{j}] != gram[{j}][{i}]")
        if det(rows) == 0:
            raise Degenerate("Gram matrix has zero determinant")
        self.gram = tuple(rows)
        self.dim = d
        self.gram_inverse = tuple(tuple(r) for r in inverse(rows))
        self.name = name
        self._hash = hash(self.gram)

    def __eq__(self, other):
        return isinstance(other, QuadraticSpace) and self.gram == other.gram

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"QuadraticSpace({self.name or self.dim})"

    def vector(self, coords):
        v = tuple(frac(x) for x in coords)
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def basis_vector(self, i):
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def pair(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length does not match the space")
        g = self.gram
        return sum((x[i] * g[i][j] * y[j] for i in range(self.dim) if x[i]
                    for j in range(self.dim) if y[j]), Fraction(0))

    def q(self, x):
        return self.pair(x, x)

    def restrict(self, basis, name=None):
        """The induced quadratic space on span(basis), in that basis."""
        gram = [[self.pair(a, b) for b in basis] for a in basis]
        return QuadraticSpace(gram, name=name)


def new_space(gram, name=None):
    return QuadraticSpace(gram, name=name)


def pair(space, x, y):
    return space.pair(x, y)


def block_sum(*grams):
    size = sum(len(g) for g in grams)
    out = [[0] * size for _ in range(size)]
    off = 0
    for g in grams:
        for i, row in enumerate(g):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(g)
    return out


def dual_class(space):
    """c = sum_{i,j} (G^-1)_{ij} e_i e_j in S^2 V."""
    return _dual_from(space, [space.basis_vector(i) for i in range(space.dim)],
                      space.gram_inverse, space)


def _dual_from(space, basis, ginv, target):
    # sum_{a,b} ginv[a][b] * t_a t_b with t_a the basis vectors pushed to `target`
    lin = [SymElement.linear(target, v) for v in basis]
    out = {}
    for a in range(len(basis)):
        for b in range(len(basis)):
            w = ginv[a][b]
            if not w:
                continue
            for m, c in multiply(lin[a], lin[b]).coeffs.items():
                out[m] = out.get(m, Fraction(0)) + w * c
    return SymElement(target, 2, out)


@dataclass(frozen=True, eq=False)
class SplitSpace:
    ambient: QuadraticSpace
    ns_basis: tuple
    tr_basis: tuple
    ns_space: QuadraticSpace
    tr_space: QuadraticSpace
    c: SymElement
    c_tr: SymElement
    c_alg: SymElement

    @property
    def rho(self):
        return len(self.ns_basis)

    @property
    def tr_dim(self):
        return len(self.tr_basis)


def split_ns(space, ns_basis):
    """Split V = tr (+) NS orthogonally and decompose c = c_tr + c_alg."""
    ns = tuple(space.vector(v) for v in ns_basis)
    if ns and rank(ns, space.dim) < len(ns):
        raise NotIndependent("ns_basis is linearly dependent")
    try:
        ns_space = space.restrict(ns, name="NS") if ns else None
    except Degenerate as exc:
        raise DegenerateNS("q restricted to NS is degenerate") from exc
    # tr = {x : q(v, x) = 0 for v in NS}
    eqs = [[sum(v[a] * space.gram[a][b] for a in range(space.dim)) for b in range(space.dim)]
           for v in ns]
    tr = tuple(tuple(v) for v in nullspace(eqs, space.dim)) if ns else \
        tuple(space.basis_vector(i) for i in range(space.dim))
    tr_space = space.restrict(tr, name="tr") if tr else None

    c = dual_class(space)
    c_alg = _dual_from(space, ns, ns_space.gram_inverse, space) if ns else SymElement.zero(space, 2)
    c_tr = _dual_from(space, tr, tr_space.gram_inverse, space) if tr else SymElement.zero(space, 2)
    if c != c_tr + c_alg:
        raise ArithmeticError("c != c_tr + c_alg; orthogonal splitting is broken")
    return SplitSpace(space, ns, tr, ns_space, tr_space, c, c_tr, c_alg)


# -- isotropic vectors ------------------------------------------------------


def primitive(v):
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def find_isotropic(space, box=2, limit=200_000):
    """Some nonzero rational v with q(v) = 0, or None.

    Tries basis vectors on the zero diagonal, then e_i +- e_j, then a bounded
    integer box search. A None answer is not a proof of anisotropy.
    """
    d = space.dim
    g = space.gram
    for i in range(d):
        if g[i][i] == 0:
            return space.basis_vector(i)
    for i in range(d):
        for j in range(i + 1, d):
            for s in (1, -1):
                if g[i][i] + 2 * s * g[i][j] + g[j][j] == 0:
                    v = [Fraction(0)] * d
                    v[i], v[j] = Fraction(1), Fraction(s)
                    return tuple(v)
    seen = 0
    for coords in product(range(-box, box + 1), repeat=d):
        seen += 1
        if seen > limit:
            break
        if any(coords) and space.q(coords) == 0:
            return primitive(coords)
    return None


def sample_isotropic(space, seed=0, count=10, hint=None):
    """Pairwise non-proportional rational points of the quadric q = 0.

    Starting from an isotropic v0 (the hint or a detected one), every w with
    q(v0, w) != 0 gives the isotropic vector q(w) v0 - 2 q(v0, w) w, i.e. the
    second intersection of the line through v0 and w with the quadric. In
    dimension 2 the quadric has at most two rational lines, so fewer than
    `count` vectors may come back there.
    """
    if hint is not None:
        v0 = space.vector(hint)
        if not any(v0) or space.q(v0) != 0:
            raise NotIsotropic("isotropic_hint does not satisfy q(v, v) = 0")
    else:
        v0 = find_isotropic(space)
        if v0 is None:
            raise NoIsotropicVector(f"no rational isotropic vector found in {space!r}")
    v0 = primitive(v0)
    rng = random.Random(seed)
    out = [v0]
    seen = {v0}
    bound = 2
    attempts = 0
    max_attempts = 200 * count + 200
    while len(out) < count and attempts < max_attempts:
        attempts += 1
        if attempts % 50 == 0:
            bound += 1
        w = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(space.dim))
        b = space.pair(v0, w)
        if b == 0:
            continue
        v = primitive(tuple(space.q(w) * x - 2 * b * y for x, y in zip(v0, w)))
        if not any(v) or v in seen:
            continue
        seen.add(v)
        out.append(v)
    if len(out) < count and space.dim >= 3:
        warnings.warn(f"only {len(out)} isotropic vectors found out of {count} requested")
    return out


def vector_to_json(v):
    return [frac_str(x) for x in v]
