"""Degrees of finite-field extensions over which an elliptic curve is maximal."""

from .bound import DegreeBound, bound_fn, max_degree
from .cubic import (
    SectorPrime,
    cubic_candidates,
    cubic_prime_family,
    sector_enumerate,
    soomro_test,
    square_exclusion_check,
)
from .diophantine import (
    AngleApprox,
    Convergent,
    convergents,
    frobenius_angle,
    prefilter,
    required_eps,
)
from .exact import (
    Classification,
    Kind,
    MaximalTriple,
    Source,
    TracePair,
    classify,
    is_maximal,
    isqrt,
    trace,
    trace_sequence,
)
from .search import SearchConfig, convergents_to_solutions, enumerate_triples, ordinary_degrees
from .supersingular import DegreeProgression, supersingular_degrees

__version__ = "0.1.0"
