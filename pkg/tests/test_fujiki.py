from fractions import Fraction
from itertools import permutations
from math import factorial
import random

import pytest

from hkcoiso.errors import ArityMismatch, WrongDegree
from hkcoiso.fujiki import (
    IntegrationFunctional, integrate, integrate_vectors, mu_i, fujiki_evaluate,
    gorenstein_pairing, gorenstein_left_kernel, harm_ideal, matching_sum,
    double_factorial_odd,
)
from hkcoiso.quadratic_space import new_space, block_sum, dual_class, split_ns
from hkcoiso.sym_algebra import harmonic_subspace, laplacian, monomial_basis, sym_dim, Subspace
from hkcoiso.symelement import SymElement, multiply
from conftest import U

SPACES = {
    "U": U,
    "U+<-2>": block_sum(U, [[-2]]),
    "nondiag": [[2, 1, 0], [1, -1, 1], [0, 1, 3]],
}


def rvec(rng, d, b=4):
    return tuple(Fraction(rng.randint(-b, b)) for _ in range(d))


def laplacian_oracle(F, p):
    # mu * Delta^n p / (2n)!: invariant functional normalized on lambda^2n
    for _ in range(F.n):
        p = laplacian(F.space, p)
    return F.mu * p.coeffs.get((), Fraction(0)) / factorial(2 * F.n)


def test_matching_count():
    assert double_factorial_odd(3) == 15
    assert matching_sum(lambda a, b: 1, list(range(6))) == 15


@pytest.mark.parametrize("name", sorted(SPACES))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_diagonal_contract(name, n):
    s = new_space(SPACES[name])
    F = IntegrationFunctional(s, n, Fraction(3, 2))
    rng = random.Random(n)
    for _ in range(10):
        lam = rvec(rng, s.dim)
        assert integrate_vectors(F, *[lam] * (2 * n)) == F.mu * s.q(lam) ** n
        assert integrate(F, SymElement.linear(s, lam) ** (2 * n)) == F.mu * s.q(lam) ** n


def test_small_examples():
    u = new_space(U)
    F = IntegrationFunctional(u, 1)
    assert integrate_vectors(F, (1, 0), (0, 1)) == 1
    G = IntegrationFunctional(u, 2)
    assert integrate_vectors(G, *[(1, 0)] * 4) == 0
    with pytest.raises(ArityMismatch):
        integrate_vectors(G, (1, 0), (0, 1))
    with pytest.raises(WrongDegree):
        integrate(G, dual_class(u))


def test_symmetric_in_arguments():
    s = new_space(SPACES["nondiag"])
    F = IntegrationFunctional(s, 2)
    rng = random.Random(9)
    vs = [rvec(rng, 3) for _ in range(4)]
    ref = integrate_vectors(F, *vs)
    assert all(integrate_vectors(F, *p) == ref for p in permutations(vs))


@pytest.mark.parametrize("name", sorted(SPACES))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_laplacian_oracle(name, n):
    s = new_space(SPACES[name])
    F = IntegrationFunctional(s, n, 7)
    rng = random.Random(n + 17)
    for _ in range(4):
        p = SymElement(s, 2 * n, {m: rng.randint(-3, 3) for m in monomial_basis(s, 2 * n)})
        assert integrate(F, p) == laplacian_oracle(F, p)


def test_harmonics_integrate_to_zero(u_m2):
    for n in (1, 2):
        F = IntegrationFunctional(u_m2, n)
        for h in harmonic_subspace(u_m2, 2 * n).basis:
            assert integrate(F, h) == 0


def test_c_power_integral_nonzero():
    for name in SPACES:
        s = new_space(SPACES[name])
        for n in (1, 2, 3):
            F = IntegrationFunctional(s, n)
            val = integrate(F, dual_class(s) ** n)
            assert val != 0
            assert val == laplacian_oracle(F, dual_class(s) ** n)


def test_mu_i_values(u_m2):
    F = IntegrationFunctional(u_m2, 2)
    assert [mu_i(F, i) for i in range(3)] == [1, Fraction(5, 3), 5]
    G = IntegrationFunctional(u_m2, 3, Fraction(3, 2))
    vals = [mu_i(G, i) for i in range(4)]
    assert vals[0] == G.mu
    assert vals[3] == integrate(G, dual_class(u_m2) ** 3)
    assert all(v != 0 for v in vals)


@pytest.mark.parametrize("name", sorted(SPACES))
def test_mu_i_relation_random(name):
    s = new_space(SPACES[name])
    c = dual_class(s)
    rng = random.Random(4)
    for n in (1, 2, 3):
        F = IntegrationFunctional(s, n)
        for i in range(n + 1):
            m = mu_i(F, i, seed=n)
            assert m != 0
            for _ in range(5):
                lam = rvec(rng, s.dim)
                lhs = integrate(F, (c ** i) * SymElement.linear(s, lam) ** (2 * n - 2 * i))
                assert lhs == m * s.q(lam) ** (n - i)


def test_scaling_q_scales_integrals():
    # q -> t q multiplies a degree-2n integral of linear forms by t^n
    g = SPACES["nondiag"]
    t = 3
    s1, s2 = new_space(g), new_space([[t * x for x in row] for row in g])
    rng = random.Random(2)
    for n in (1, 2):
        vs = [rvec(rng, 3) for _ in range(2 * n)]
        a = integrate_vectors(IntegrationFunctional(s1, n), *vs)
        b = integrate_vectors(IntegrationFunctional(s2, n), *vs)
        assert b == t ** n * a


def test_fujiki_evaluate_against_matching_sum(u_m2):
    split = split_ns(u_m2, [[0, 0, 1]])
    F = IntegrationFunctional(u_m2, 2)
    alpha, beta = (1, 0, 0), (2, -1, 3)
    P = SymElement.linear(u_m2, (1, 1, 1))  # i = 1
    val = fujiki_evaluate(F, split, P, alpha, beta)
    brute = integrate_vectors(F, alpha, alpha, beta, (1, 1, 1))
    assert val == brute != 0


def test_fujiki_q_alpha_beta_factor():
    # alpha isotropic, orthogonal to NS, P = l^i: value divisible by q(alpha, beta)^(n-i+1)
    s = new_space(block_sum(U, U, [[-2]]))
    split = split_ns(s, [[0, 0, 0, 0, 1]])
    l = (0, 0, 0, 0, 1)
    alpha = (1, 0, 0, 0, 0)
    rng = random.Random(8)
    for n, i in ((2, 1), (2, 2), (3, 1), (3, 2)):
        F = IntegrationFunctional(s, n)
        P = SymElement.linear(s, l) ** i
        for _ in range(3):
            beta = rvec(rng, 5)
            val = fujiki_evaluate(F, split, P, alpha, beta)
            if s.pair(alpha, beta) == 0:
                assert val == 0
        beta0 = (0, 1, 0, 0, 3)  # q(alpha, beta0) = 1
        perp = (0, 0, 1, 0, 3)   # q(alpha, perp) = 0
        assert fujiki_evaluate(F, split, P, alpha, perp) == 0
        val = fujiki_evaluate(F, split, P, alpha, beta0)
        # l itself is coisotropic, l^2 is not
        assert (val == 0) if i == 1 else (val != 0)


def test_fujiki_evaluate_degree(u_m2):
    split = split_ns(u_m2, [[0, 0, 1]])
    F = IntegrationFunctional(u_m2, 1)
    with pytest.raises(WrongDegree):
        fujiki_evaluate(F, split, dual_class(u_m2), (1, 0, 0), (0, 1, 0))


def test_pairing_shape(u_m2):
    F = IntegrationFunctional(u_m2, 2)
    m = gorenstein_pairing(F, 0)
    assert len(m) == 1 and len(m[0]) == sym_dim(3, 4)


def _c_power_kernel(space, n, a):
    c = dual_class(space)
    gens = []
    for j in range(a // 2 + 1):
        if a - 2 * j > 2 * n - a:
            gens += [multiply(c ** j, h) for h in harmonic_subspace(space, a - 2 * j).basis]
    return Subspace.span(space, a, gens)


@pytest.mark.parametrize("name", sorted(SPACES))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_gorenstein_kernel_is_harm_ideal(name, n):
    s = new_space(SPACES[name])
    F = IntegrationFunctional(s, n)
    for a in range(2 * n + 1):
        ker = gorenstein_left_kernel(F, a)
        assert ker == harm_ideal(s, n, a)
        assert ker == _c_power_kernel(s, n, a)
        if a <= n:
            assert ker.dim == 0
    assert gorenstein_left_kernel(F, n + 1) == harmonic_subspace(s, n + 1)
