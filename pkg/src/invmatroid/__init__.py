"""Inverse matroid problems under the l-infinity norm, in exact rationals.

Given a matroid, weights ``w`` and a set ``S0``, each solver returns the
closest weighting (in max-norm) under which the maximum-weight bases relate
to ``S0`` as the chosen problem asks, together with the optimal deviation.
"""

from .all_only import AllCertificate, HomogenizationPlan, homogenize, solve_all, solve_all_integral, solve_only
from .errors import (
    CapacityError,
    IntegralityError,
    InverseMatroidError,
    MalformedInputError,
    PreconditionError,
    VerificationError,
)
from .exists import (
    ExistsCertificate,
    check_exists_feasible_closure,
    solve_exists,
    solve_exists_binary,
    solve_exists_integral,
    solve_exists_reduction,
)
from .greedy import PLAIN, TieBreak, Variant, Weighting, as_weighting, check_feasible, check_preconditions, greedy_basis
from .im import ImCertificate, im_optimum, minmax_value, solve_im, solve_im_integral
from .instance import ProblemInstance, load_instance, parse_instance
from .matroid import (
    Contraction,
    CountingMatroid,
    DirectSum,
    Dual,
    Graphic,
    LinearRational,
    Matroid,
    Partition,
    Restriction,
    Uniform,
    connected_components,
    exchange_bijection,
)
from .negated import (
    NotAllCertificate,
    NotExistsCertificate,
    solve_not_all,
    solve_not_exists,
    solve_not_only,
    solve_relaxed_not_exists,
    solve_relaxed_not_exists_integral,
)
from .oracle import BasisList, brute_optimum, enumerate_bases, feasible_by_enumeration

__version__ = "0.1.0"
