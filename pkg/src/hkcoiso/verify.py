"""
The invariant suite behind ``hkcoiso verify-all``.

Each check is a named, deterministic function returning (passed, detail).
Checks may run on a thread pool (HK_COISO_THREADS caps its size), but the
report lists them in a fixed order and contains no timing data, so its JSON
is byte-identical for any thread count.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import os
import random

from . import chow_model as chow
from .coisotropic import (
    make_problem, coisotropic_space, coisotropic_space_via_fujiki, ctr_family_space,
    cup_ctr_injective, MIN_TR_DIM,
)
from .fujiki import IntegrationFunctional, integrate, mu_i, gorenstein_left_kernel
from .presets import load_preset
from .quadratic_space import dual_class, sample_isotropic
from .sym_algebra import (
    harmonic_subspace, isotropic_power_span, c_power_is_direct, sym_dim,
)
from .symelement import SymElement, multiply

DESK_PRESETS = ("u", "u-m2", "u2-m2", "u2-m2-e")
HYPERBOLIC_PRESETS = DESK_PRESETS
COISO_PRESETS = ("u2-m2", "u2-m2-e")


def thread_count():
    raw = os.environ.get("HK_COISO_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _random_vector(rng, dim):
    return tuple(Fraction(rng.randint(-4, 4)) for _ in range(dim))


# -- individual checks ------------------------------------------------------


def check_degree4_dimension():
    """n=2, i=2, rho=2, mode cle: exactly 3."""
    split = load_preset("u2-m2-e").split()
    dim = coisotropic_space(make_problem(split, 2, 2, "cle")).dimension
    return dim == 3, {"dimension": dim}


def check_lower_bounds(ns=(2, 3)):
    rows = []
    ok = True
    for preset, mode in (("u2-m2", "cl"), ("u2-m2-e", "cle")):
        split = load_preset(preset).split()
        for n in ns:
            for i in range(1, n + 1):
                dim = coisotropic_space(make_problem(split, n, i, mode)).dimension
                bound = 1 if mode == "cl" else i + 1
                ok &= dim >= bound
                rows.append({"preset": preset, "mode": mode, "n": n, "i": i,
                             "dimension": dim, "bound": bound})
    return ok, {"rows": rows}


def check_lambda0(presets=("u-m2", "u2-m2", "u2-m2-e"), max_n=3):
    rows = []
    ok = True
    for preset in presets:
        split = load_preset(preset).split()
        route = "harmonic" if split.tr_dim >= MIN_TR_DIM else "fujiki"
        for n in range(1, max_n + 1):
            for i in range(1, n + 1):
                sp = ctr_family_space(make_problem(split, n, i, "cl"), route=route)
                good = sp.dimension <= 1 and all(row[0] != 0 for row in sp.coords)
                ok &= good
                rows.append({"preset": preset, "n": n, "i": i, "route": route,
                             "dimension": sp.dimension, "basis": sp.pretty()})
    return ok, {"rows": rows}


def check_cup_ctr(ns=(2, 3)):
    rows = []
    ok = True
    for preset in COISO_PRESETS:
        split = load_preset(preset).split()
        for n in ns:
            full = cup_ctr_injective(split, n)
            graded = [cup_ctr_injective(split, n, k) for k in range(1, n + 1)]
            ok &= full and all(graded)
            rows.append({"preset": preset, "n": n, "injective": full, "graded": graded})
    return ok, {"rows": rows}


def check_fujiki_contracts(presets=DESK_PRESETS, max_n=3, samples=10, seed=0):
    rows = []
    ok = True
    for preset in presets:
        space = load_preset(preset).space
        c = dual_class(space)
        rng = random.Random(seed)
        for n in range(1, max_n + 1):
            F = IntegrationFunctional(space, n)
            for i in range(n + 1):
                mui = mu_i(F, i)
                ci = c ** i
                good = mui != 0
                for _ in range(samples):
                    lam = _random_vector(rng, space.dim)
                    val = integrate(F, multiply(ci, SymElement.linear(space, lam) ** (2 * n - 2 * i)))
                    good &= val == mui * space.q(lam) ** (n - i)
                ok &= good
                rows.append({"preset": preset, "n": n, "i": i, "mu_i": str(mui), "passed": good})
    return ok, {"rows": rows}


def check_gorenstein(presets=DESK_PRESETS, max_n=3):
    rows = []
    ok = True
    for preset in presets:
        space = load_preset(preset).space
        for n in range(1, max_n + 1):
            F = IntegrationFunctional(space, n)
            zero = [gorenstein_left_kernel(F, a).dim for a in range(n + 1)]
            top = gorenstein_left_kernel(F, n + 1) == harmonic_subspace(space, n + 1)
            direct = all(c_power_is_direct(space, k) for k in range(2 * n + 1))
            good = not any(zero) and top and direct
            ok &= good
            rows.append({"preset": preset, "n": n, "kernel_dims_low": zero,
                         "kernel_is_harm": top, "c_power_direct": direct})
    return ok, {"rows": rows}


def check_oracle_equivalence(max_n=3):
    rows = []
    ok = True
    for preset, modes in (("u2-m2", ("cl",)), ("u2-m2-e", ("cl", "cle"))):
        split = load_preset(preset).split()
        for mode in modes:
            for n in range(1, max_n + 1):
                for i in range(1, n + 1):
                    prob = make_problem(split, n, i, mode)
                    same = coisotropic_space(prob).coords == coisotropic_space_via_fujiki(prob).coords
                    ok &= same
                    rows.append({"preset": preset, "mode": mode, "n": n, "i": i, "equal": same})
    return ok, {"rows": rows}


def check_isotropic_span(presets=HYPERBOLIC_PRESETS, max_k=4, seed=0):
    rows = []
    ok = True
    for preset in presets:
        cfg = load_preset(preset)
        space = cfg.space
        for k in range(max_k + 1):
            harm = harmonic_subspace(space, k)
            samples = sample_isotropic(space, seed=seed, count=harm.dim + 3, hint=cfg.isotropic_hint)
            same = isotropic_power_span(space, k, samples) == harm
            ok &= same
            rows.append({"preset": preset, "k": k, "harm_dim": harm.dim,
                         "samples": len(samples), "equal": same})
    return ok, {"rows": rows}


def check_chow(max_m=4, max_n=4):
    rows = []
    ok = True
    for m in range(1, max_m + 1):
        alph = chow.PointAlphabet.standard(m)
        for n in range(1, max_n + 1):
            comm = chow.verify_commutation(alph, n) if n >= 2 else True
            proj = chow.projector_laws(alph, n)
            dims = [len(chow.component_space(alph, n, k)) for k in range(n + 1)]
            direct = sum(dims) == alph.dim(n)
            kernel = chow.kernel_sigma(alph, n) == chow.star_span(alph, n)
            opp = all(chow.opposite(alph, n, i) for i in range(n + 1))
            inv = all(chow.fbb_marked_point_invariant(alph, n, i, alph.symbols[1])
                      for i in range(n + 1))
            good = comm and proj and direct and kernel and opp and inv
            ok &= good
            rows.append({"m": m, "n": n, "commutation": comm, "projectors": proj,
                         "direct": direct, "kernel_is_star_span": kernel,
                         "opposite": opp, "fbb_point_independent": inv})
    return ok, {"rows": rows}


def check_split_invariants(presets=DESK_PRESETS):
    rows = []
    ok = True
    for preset in presets:
        cfg = load_preset(preset)
        split = cfg.split()
        space = split.ambient
        cross = all(space.pair(a, b) == 0 for a in split.ns_basis for b in split.tr_basis)
        dims = split.rho + split.tr_dim == space.dim
        csum = split.c == split.c_tr + split.c_alg
        good = cross and dims and csum
        ok &= good
        rows.append({"preset": preset, "rho": split.rho, "tr_dim": split.tr_dim,
                     "orthogonal": cross, "dims_add": dims, "c_splits": csum})
    return ok, {"rows": rows}


def check_harmonic_dims(presets=DESK_PRESETS, max_k=4):
    rows = []
    ok = True
    for preset in presets:
        space = load_preset(preset).space
        for k in range(max_k + 1):
            d = harmonic_subspace(space, k).dim
            expected = sym_dim(space.dim, k) - sym_dim(space.dim, k - 2)
            ok &= d == expected
            rows.append({"preset": preset, "k": k, "dim": d, "expected": expected})
    return ok, {"rows": rows}


CHECKS = (
    ("split_invariants", check_split_invariants),
    ("harmonic_dimensions", check_harmonic_dims),
    ("isotropic_power_span", check_isotropic_span),
    ("fujiki_contracts", check_fujiki_contracts),
    ("gorenstein_structure", check_gorenstein),
    ("degree4_dimension", check_degree4_dimension),
    ("lower_bounds", check_lower_bounds),
    ("lambda0_nonzero", check_lambda0),
    ("cup_ctr_injective", check_cup_ctr),
    ("oracle_equivalence", check_oracle_equivalence),
    ("chow_model", check_chow),
)


def _run(item):
    name, fn = item
    passed, detail = fn()
    return {"name": name, "passed": bool(passed), "detail": detail}


def verify_all(threads=None):
    threads = threads or thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run, CHECKS))
    else:
        results = [_run(item) for item in CHECKS]
    return {"passed": all(r["passed"] for r in results), "checks": results}
