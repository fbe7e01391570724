"""Exact computations for the principal series of G2: extended quotients of
the dual torus, correcting cocharacters, reducibility loci and the based ring
of the lowest cell in the SO(4) case."""

from .scalars import SymbolicScalar, parse_scalar, Q, q, nu, j, minus_one, ONE
from .weyl import WeylElement, FiniteGroup, generate, conjugacy_classes, g2_weyl_group, act
from .torus import TorusPoint, point, snf, fixed_locus, orbit, orbit_rep
from .inertial import Case, CASES, InertialPoint, classify_case, stabilizer_subgroup, orbit_size
from .families import (PrincipalSeriesPoint, is_reducible, is_reducible_by_roots,
                       constituent_count, flat_family, reducibility_curves, special_points)
from .extquot import ExtQuotComponent, CompactForm, extended_quotient, cell_of_point
from .correcting import cocharacter, pi_tau, fiber, assign_triple, verify_counts, tempered_table
from .asymptotic import (RepRingElement, TensorBasisElement, LowestCellElement,
                         GradedPolyMatrix, cg_multiply, table2_basis, j_multiply,
                         tensor_to_graded, evaluate, epsilon, delta0,
                         crossed_product_full_ideal_check)

__version__ = "0.1.0"
