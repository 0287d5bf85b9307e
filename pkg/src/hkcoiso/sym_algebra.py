"""
The truncated symmetric algebra S^* V of a quadratic space.

Harmonic elements are the kernel of the q-Laplacian

    Delta = sum_{i,j} G_ij d_i d_j,

normalized so that Delta(v^k) = k (k-1) q(v) v^(k-2) for a vector v. Then
Harm^k is the span of k-th powers of isotropic vectors, and every element of
S^k V splits uniquely as sum_j c^j h_j with h_j in Harm^(k-2j).
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb
import warnings

from .errors import DegreeTooLow, NotIsotropic, DimensionMismatch
from .linalg import nullspace, rank, row_basis, solve, frac_str
from .quadratic_space import dual_class
from .symelement import SymElement, multiply, monomials, monomial_index

__all__ = [
    "SymElement", "Subspace", "monomial_basis", "multiply", "laplacian",
    "laplacian_matrix", "harmonic_subspace", "c_power_decompose",
    "isotropic_power_span", "sym_dim", "c_multiple_subspace",
]


def sym_dim(dim, k):
    return comb(dim + k - 1, k) if k >= 0 else 0


def monomial_basis(space, k):
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return list(monomials(space.dim, k))


class Subspace:
    """A subspace of S^k V held as a reduced row echelon basis.

    Two Subspace objects over the same space and degree are equal exactly
    when they have identical bases.
    """

    def __init__(self, space, degree, rows):
        self.space = space
        self.degree = degree
        self.rows = [list(r) for r in rows]

    @classmethod
    def span(cls, space, degree, elements):
        n = sym_dim(space.dim, degree)
        vecs = []
        for p in elements:
            if p.degree != degree:
                raise ValueError("all spanning elements must share the degree")
            vecs.append(p.coords())
        return cls(space, degree, row_basis(vecs, n))

    @classmethod
    def full(cls, space, degree):
        n = sym_dim(space.dim, degree)
        return cls(space, degree, [[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ambient_dim(self):
        return sym_dim(self.space.dim, self.degree)

    @property
    def basis(self):
        return [SymElement.from_coords(self.space, self.degree, r) for r in self.rows]

    def contains(self, p):
        if p.degree != self.degree:
            return False
        if p.is_zero():
            return True
        return rank(self.rows + [p.coords()], self.ambient_dim) == self.dim

    def __contains__(self, p):
        return self.contains(p)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.space == other.space and self.degree == other.degree
                and self.rows == other.rows)

    def __add__(self, other):
        return Subspace(self.space, self.degree, row_basis(self.rows + other.rows, self.ambient_dim))

    def intersection_dim(self, other):
        return self.dim + other.dim - (self + other).dim

    def __repr__(self):
        return f"Subspace(degree={self.degree}, dim={self.dim} of {self.ambient_dim})"

    def to_json(self):
        return [p.to_json() for p in self.basis]


def _gram_rows(space):
    return [[(j, g) for j, g in enumerate(row) if g] for row in space.gram]


def laplacian(space, p):
    """Delta p = sum_{i,j} G_ij d_i d_j p."""
    if p.degree < 2:
        raise DegreeTooLow("the Laplacian needs degree >= 2")
    rows = _gram_rows(space)
    out = {}
    for m, c in p.coeffs.items():
        cnt = Counter(m)
        for i, ai in cnt.items():
            cnt[i] -= 1
            for j, g in rows[i]:
                aj = cnt[j]
                if not aj:
                    continue
                rest = Counter(cnt)
                rest[j] -= 1
                key = tuple(sorted(rest.elements()))
                out[key] = out.get(key, Fraction(0)) + g * ai * aj * c
            cnt[i] += 1
    return SymElement(space, p.degree - 2, out)


@lru_cache(maxsize=64)
def laplacian_matrix(space, k):
    """Matrix of Delta: S^k V -> S^(k-2) V, rows indexed by target monomials."""
    src = monomials(space.dim, k)
    tgt_idx = monomial_index(space.dim, k - 2)
    mat = [[Fraction(0)] * len(src) for _ in range(len(tgt_idx))]
    for col, m in enumerate(src):
        for key, c in laplacian(space, SymElement(space, k, {m: 1})).coeffs.items():
            mat[tgt_idx[key]][col] = c
    return mat


@lru_cache(maxsize=64)
def harmonic_subspace(space, k):
    """Harm^k = ker(Delta) on S^k V; all of S^k V for k < 2."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k < 2:
        return Subspace.full(space, k)
    return Subspace(space, k, nullspace(laplacian_matrix(space, k), sym_dim(space.dim, k)))


def c_multiple_subspace(space, k):
    """c * S^(k-2) V inside S^k V."""
    if k < 2:
        return Subspace(space, k, [])
    c = dual_class(space)
    return Subspace.span(space, k, [multiply(c, SymElement(space, k - 2, {m: 1}))
                                    for m in monomials(space.dim, k - 2)])


@lru_cache(maxsize=64)
def _c_power_blocks(space, k):
    c = dual_class(space)
    blocks = []
    cj = SymElement.one(space)
    for j in range(k // 2 + 1):
        harm = harmonic_subspace(space, k - 2 * j).basis
        blocks.append([multiply(cj, h).coords() for h in harm])
        cj = multiply(cj, c)
    return blocks


def c_power_decompose(space, p):
    """The unique (h_0, ..., h_{k//2}) with p = sum_j c^j h_j, h_j harmonic."""
    k = p.degree
    blocks = _c_power_blocks(space, k)
    columns = [v for b in blocks for v in b]
    x = solve(columns, p.coords())
    if x is None:
        raise ArithmeticError("c-power decomposition failed; the form must be degenerate")
    out = []
    pos = 0
    for j, b in enumerate(blocks):
        harm = harmonic_subspace(space, k - 2 * j).basis
        h = SymElement.zero(space, k - 2 * j)
        for coef, basis_el in zip(x[pos:pos + len(b)], harm):
            if coef:
                h = h + basis_el.scale(coef)
        pos += len(b)
        out.append(h)
    return out


def c_power_is_direct(space, k):
    """dim(c S^(k-2)) + dim(Harm^k) == dim S^k with trivial intersection."""
    cs = c_multiple_subspace(space, k)
    harm = harmonic_subspace(space, k)
    total = sym_dim(space.dim, k)
    return cs.dim + harm.dim == total and (cs + harm).dim == total


def isotropic_power_span(space, k, samples):
    """Span of v^k over isotropic sample vectors v."""
    powers = []
    for v in samples:
        if len(v) != space.dim:
            raise DimensionMismatch("sample has wrong length")
        if space.q(v) != 0:
            raise NotIsotropic(f"q(v, v) = {frac_str(space.q(v))} for sample {v}")
        powers.append(SymElement.linear(space, v) ** k)
    return Subspace.span(space, k, powers)


def warn_if_small_tr(tr_dim):
    if tr_dim < 3:
        warnings.warn("transcendental part has dimension < 3; the orthogonal group acting on "
                      "it is too small for harmonic spaces to be irreducible")
