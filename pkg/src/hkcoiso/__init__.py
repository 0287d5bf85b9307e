"""Exact computations in the subalgebra of a hyper-Kahler cohomology ring
generated by H^2: Fujiki integration, harmonic decompositions, coisotropic
classes, and a free model of zero-cycles on symmetric products."""

from .quadratic_space import QuadraticSpace, SplitSpace, new_space, pair, split_ns, dual_class, sample_isotropic
from .symelement import SymElement
from .sym_algebra import (
    Subspace, monomial_basis, multiply, laplacian, harmonic_subspace,
    c_power_decompose, isotropic_power_span,
)
from .fujiki import (
    IntegrationFunctional, integrate_vectors, integrate, mu_i, fujiki_evaluate,
    gorenstein_pairing, gorenstein_left_kernel, harm_ideal,
)
from .coisotropic import (
    GeneratorMode, CoisotropicProblem, CoisotropicSpace, make_problem, is_coisotropic,
    coisotropic_space, coisotropic_space_via_fujiki, lambda0_check, cup_ctr_injective,
)
from .presets import load_preset, load_file, PRESET_NAMES

__version__ = "0.1.0"
