"""
Coisotropic classes among polynomials in c and divisor classes.

A class z in S^i V is coisotropic when h z lies in Harm^(n+1)(V) for every
h in Harm^(n-i+1)(V_tr); that is, h z vanishes in S^(n+1) V / Harm^(n+1),
the image of S^(n+1) H^2 in H^(2n+2). The harmonic space of V_tr is the span
of the powers alpha^(n-i+1) of isotropic transcendental classes, which is
where the period [sigma] lives.

The second route replaces membership in Harm^(n+1) by the vanishing of
int(alpha^(n-i+1) beta^(n-1) z) for sampled isotropic alpha in V_tr and
enough beta for beta^(n-1) to span S^(n-1) V. It needs rational isotropic
vectors in V_tr but no Laplacian, and serves as an independent check.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import random

from .errors import (
    WrongDegree, TrTooSmall, ViolatesTheorem, NotInSpan, NotCoisotropic, HKError,
)
from .fujiki import IntegrationFunctional
from .linalg import nullspace, rank, solve, frac_str
from .quadratic_space import SplitSpace, sample_isotropic, dual_class
from .sym_algebra import Subspace, harmonic_subspace, laplacian, sym_dim
from .symelement import SymElement, multiply, substitute, monomials, monomial_index

MIN_TR_DIM = 3


class GeneratorMode(str, Enum):
    C_L = "cl"
    C_L_E = "cle"
    FULL = "full"


@dataclass(frozen=True, eq=False)
class CoisotropicProblem:
    split: SplitSpace
    n: int
    i: int
    mode: GeneratorMode
    l: tuple
    e: tuple = None

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.i <= self.n:
            raise ValueError("need n >= 1 and 1 <= i <= n")
        object.__setattr__(self, "mode", GeneratorMode(self.mode))
        space = self.split.ambient
        if space.q(self.l) == 0:
            raise ValueError("q(l, l) must be nonzero")
        ns = self.split.ns_basis
        for v in (self.l, self.e):
            if v is not None and rank(list(ns) + [v], space.dim) != len(ns):
                raise ValueError("l and e must lie in NS")
        if self.mode is GeneratorMode.C_L_E and self.e is None:
            raise ValueError("mode cle needs a second divisor class e")

    @property
    def space(self):
        return self.split.ambient


def make_problem(split, n, i, mode="cl"):
    """Problem with l, e taken from the first two NS basis vectors."""
    mode = GeneratorMode(mode)
    ns = split.ns_basis
    if not ns:
        raise ValueError("NS is empty; a divisor class l is required")
    if mode is GeneratorMode.C_L_E and len(ns) < 2:
        raise ValueError("mode cle needs rho >= 2")
    e = ns[1] if len(ns) > 1 and mode is not GeneratorMode.C_L else None
    return CoisotropicProblem(split, n, i, mode, ns[0], e)


@dataclass
class CoisotropicSpace:
    problem: CoisotropicProblem
    labels: list          # candidate monomial labels, in candidate order
    coords: list          # RREF rows over the candidates
    basis: list = field(default_factory=list)

    @property
    def dimension(self):
        return len(self.coords)

    def to_json(self):
        return [
            [{"term": lab, "coeff": frac_str(c)} for lab, c in zip(self.labels, row) if c]
            for row in self.coords
        ]

    def pretty(self):
        return [_pretty(self.labels, row) for row in self.coords]


def _pretty(labels, row):
    parts = []
    for lab, c in zip(labels, row):
        if not c:
            continue
        coef = "" if c == 1 else "-" if c == -1 else frac_str(c) + "*"
        parts.append(coef + lab)
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _power_label(names_exps):
    parts = []
    for name, k in names_exps:
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) or "1"


def candidates(problem):
    """(labels, elements) spanning the candidate space W in S^i V.

    Order: higher powers of c first, then of l, then of e; FULL mode uses
    the monomial basis of S^i V.
    """
    space = problem.space
    i = problem.i
    if problem.mode is GeneratorMode.FULL:
        labels, els = [], []
        for m in monomials(space.dim, i):
            exps = [(f"e{a + 1}", m.count(a)) for a in sorted(set(m))]
            labels.append(_power_label(exps))
            els.append(SymElement(space, i, {m: 1}))
        return labels, els
    c = problem.split.c
    l = SymElement.linear(space, problem.l)
    e = SymElement.linear(space, problem.e) if problem.mode is GeneratorMode.C_L_E else None
    labels, els = [], []
    for j in range(i // 2, -1, -1):
        rest = i - 2 * j
        pairs = [(rest, 0)] if e is None else [(a, rest - a) for a in range(rest, -1, -1)]
        for a, b in pairs:
            el = c ** j * l ** a
            if b:
                el = el * e ** b
            labels.append(_power_label([("c", j), ("l", a), ("e", b)]))
            els.append(el)
    return labels, els


def ctr_family(problem):
    """The family l^(i-2j) c_tr^j, j = 0..i//2, with l^i first."""
    space = problem.space
    l = SymElement.linear(space, problem.l)
    labels, els = [], []
    for j in range(problem.i // 2 + 1):
        labels.append(_power_label([("l", problem.i - 2 * j), ("c_tr", j)]))
        els.append(l ** (problem.i - 2 * j) * problem.split.c_tr ** j)
    return labels, els


def tr_harmonics(split, k):
    """Basis of Harm^k(V_tr), written in the ambient coordinates."""
    harm = harmonic_subspace(split.tr_space, k)
    return [substitute(h, split.tr_basis, split.ambient) for h in harm.basis]


def _require_tr(split):
    if split.tr_dim < MIN_TR_DIM:
        raise TrTooSmall(f"dim V_tr = {split.tr_dim} < {MIN_TR_DIM}")


def _check_independent(space, degree, els):
    n = sym_dim(space.dim, degree)
    if rank([p.coords() for p in els], n) != len(els):
        raise HKError("candidate generators are linearly dependent in S^i V")


def is_coisotropic(problem, z):
    if z.degree != problem.i:
        raise WrongDegree(f"expected degree {problem.i}, got {z.degree}")
    _require_tr(problem.split)
    if z.is_zero():
        return True
    n = problem.n
    for h in tr_harmonics(problem.split, n - problem.i + 1):
        if not laplacian(problem.space, multiply(h, z)).is_zero():
            return False
    return True


def _harmonic_route_kernel(problem, els):
    _require_tr(problem.split)
    space = problem.space
    n = problem.n
    harm = tr_harmonics(problem.split, n - problem.i + 1)
    tgt = monomial_index(space.dim, n - 1)
    rows = []
    for h in harm:
        block = [[Fraction(0)] * len(els) for _ in range(len(tgt))]
        for col, w in enumerate(els):
            for m, c in laplacian(space, multiply(h, w)).coeffs.items():
                block[tgt[m]][col] = c
        rows.extend(r for r in block if any(r))
    return nullspace(rows, len(els))


def _space_from_kernel(problem, labels, els, kernel):
    basis = []
    for row in kernel:
        z = SymElement.zero(problem.space, problem.i)
        for coef, w in zip(row, els):
            if coef:
                z = z + w.scale(coef)
        basis.append(z)
    return CoisotropicSpace(problem, labels, kernel, basis)


def coisotropic_space(problem):
    """Coisotropic elements of the candidate space, via harmonic membership."""
    labels, els = candidates(problem)
    _check_independent(problem.space, problem.i, els)
    return _space_from_kernel(problem, labels, els, _harmonic_route_kernel(problem, els))


def _beta_family(space, degree, seed):
    """Integer vectors b with {b^degree} spanning S^degree V."""
    target = sym_dim(space.dim, degree)
    rng = random.Random(seed)
    betas = [space.basis_vector(i) for i in range(space.dim)]
    powers = [SymElement.linear(space, b) ** degree for b in betas]
    while rank([p.coords() for p in powers], target) < target:
        for _ in range(target):
            b = tuple(Fraction(rng.randint(-3, 3)) for _ in range(space.dim))
            betas.append(b)
            powers.append(SymElement.linear(space, b) ** degree)
    return betas


def transcendental_isotropic(split, count, seed=0):
    """Isotropic vectors of V_tr, written in ambient coordinates."""
    local = sample_isotropic(split.tr_space, seed=seed, count=count)
    out = []
    for v in local:
        amb = [Fraction(0)] * split.ambient.dim
        for coef, t in zip(v, split.tr_basis):
            for a in range(len(amb)):
                amb[a] += coef * t[a]
        out.append(tuple(amb))
    return out


def _fujiki_route_kernel(problem, els, seed=0, mu=1):
    space = problem.space
    n, i = problem.n, problem.i
    F = IntegrationFunctional(space, n, mu)
    k = n - i + 1
    alphas = transcendental_isotropic(problem.split, sym_dim(problem.split.tr_dim, k) + 3, seed)
    betas = _beta_family(space, n - 1, seed)
    functionals = [F.against(w) for w in els]
    rows = []
    for a in alphas:
        ak = SymElement.linear(space, a) ** k
        for b in betas:
            ab = multiply(ak, SymElement.linear(space, b) ** (n - 1)).coeffs
            rows.append([sum((c * f[m] for m, c in ab.items() if m in f), Fraction(0))
                         for f in functionals])
    return nullspace(rows, len(els))


def coisotropic_space_via_fujiki(problem, seed=0, mu=1):
    """Same space through top-degree integrals against alpha^(n-i+1) beta^(n-1)."""
    labels, els = candidates(problem)
    _check_independent(problem.space, problem.i, els)
    return _space_from_kernel(problem, labels, els, _fujiki_route_kernel(problem, els, seed, mu))


def ctr_family_space(problem, route="harmonic"):
    """Coisotropic elements of span{l^(i-2j) c_tr^j}."""
    labels, els = ctr_family(problem)
    _check_independent(problem.space, problem.i, els)
    if route == "harmonic":
        kernel = _harmonic_route_kernel(problem, els)
    else:
        kernel = _fujiki_route_kernel(problem, els)
    return _space_from_kernel(problem, labels, els, kernel)


def lambda0_check(problem, z):
    """Coefficient of l^i when z = sum_j lambda_j l^(i-2j) c_tr^j is coisotropic.

    A zero coefficient on a nonzero coisotropic z is impossible by the
    injectivity of cup with c_tr, so it raises ViolatesTheorem.
    """
    if z.degree != problem.i:
        raise WrongDegree(f"expected degree {problem.i}, got {z.degree}")
    if z.is_zero():
        raise ValueError("z must be nonzero")
    _, els = ctr_family(problem)
    coef = solve([w.coords() for w in els], z.coords())
    if coef is None:
        raise NotInSpan("z is not a combination of l^(i-2j) c_tr^j")
    if problem.split.tr_dim >= MIN_TR_DIM:
        ok = is_coisotropic(problem, z)
    else:
        ok = bool(_fujiki_route_kernel(problem, [z]))
    if not ok:
        raise NotCoisotropic("z is not coisotropic")
    if coef[0] == 0:
        raise ViolatesTheorem("nonzero coisotropic z with vanishing l^i coefficient")
    return coef[0]


def cup_ctr_injective(split, n, k=None):
    """Injectivity of multiplication by c_tr into the quotient by the Harm ideal.

    With k=None: S^(n-1) V -> S^(n+1) V / Harm^(n+1)(V). With k given: the
    graded piece S^(k-1) V_tr -> S^(k+1) V_tr / Harm^(k+1)(V_tr). The quotient
    by Harm is identified with S^(deg-2) through the (surjective) Laplacian.
    """
    if k is None:
        space, ctr, deg = split.ambient, split.c_tr, n - 1
    else:
        if not 1 <= k <= n:
            raise ValueError("need 1 <= k <= n")
        space, deg = split.tr_space, k - 1
        ctr = dual_class(space)
    cols = []
    for m in monomials(space.dim, deg):
        img = laplacian(space, multiply(ctr, SymElement(space, deg, {m: 1})))
        cols.append(img.coords())
    # rank of the column set equals the rank of the matrix
    return rank(cols, sym_dim(space.dim, deg)) == len(cols)
