"""Exact multiparameter characteristic polynomials of Lie algebra representations.

The characteristic polynomial ``det(z0 I + phi(L))`` of a module over a
classical simple Lie algebra or G2 splits into orbital factors, one per
dominant weight, written in generators of the Weyl-invariant ring.
"""

from __future__ import annotations

from .errors import (InvalidPower, InvalidRank, InvalidType, LieCharPolyError, Mismatch, MissingVariable,
                     MixedParity, NotDivisible, NotDominant, NotInvariant, NotInWeightSystem, NotSymmetric,
                     OddE3, IndexOutOfRange)
from .exact_poly import MultiPoly
from .root_system import LieType, RootSystem, build, cartan_matrix, weyl_group_order
from .weyl_orbit import Orbit, orbit, stabilizer_order
from .weight_system import CharacterByOrbit, character_by_orbit, dim, multiplicity
from .eigen_map import EigenCoordinateScheme, eigen_form, scheme
from .invariant_reduce import reduce_for_type, generator_set
from .orbital_factor import FactoredCharPoly, OrbitalFactor, assemble, factor_by_division, orbital_factor
from .matrix_oracle import (MatrixRep, PencilElement, adjoint_rep, char_poly, defining_rep, generator_values,
                            induced_rep, pfaffian, random_pencil, verify)

__version__ = "0.1.0"

__all__ = [
    "LieCharPolyError", "NotDivisible", "MissingVariable", "InvalidRank", "InvalidType", "IndexOutOfRange",
    "NotDominant", "NotInWeightSystem", "NotInvariant", "NotSymmetric", "MixedParity", "OddE3",
    "InvalidPower", "Mismatch",
    "MultiPoly", "LieType", "RootSystem", "build", "cartan_matrix", "weyl_group_order",
    "Orbit", "orbit", "stabilizer_order",
    "CharacterByOrbit", "character_by_orbit", "dim", "multiplicity",
    "EigenCoordinateScheme", "eigen_form", "scheme",
    "reduce_for_type", "generator_set",
    "OrbitalFactor", "FactoredCharPoly", "orbital_factor", "assemble", "factor_by_division",
    "MatrixRep", "PencilElement", "defining_rep", "adjoint_rep", "induced_rep", "char_poly",
    "generator_values", "pfaffian", "random_pencil", "verify",
]
