"""Exact enumeration of parking functions, spherical parking functions,
skeleton-ideal standard monomials and uprooted trees."""

from .errors import DimensionError, ParameterError
from .seqcore import (
    Distribution,
    UVector,
    degree,
    enumerate_spherical,
    is_parking_function,
    is_spherical_parking_function,
    is_u_parking_function,
    make_u_nk,
    pf_degree_distribution,
    spherical_degree_distribution,
)
from .ideal import GeneratorSet, count_standard, enumerate_standard, is_standard, skeleton_generators
from .arbor import RootedTree, enumerate_rooted_trees, enumerate_uprooted, is_uprooted
from .crosscheck import VerificationReport

__version__ = "0.1.0"
