"""Lens spaces obtained by integer surgery on double-primitive knots in S^3.

The package enumerates the known families of double-primitive knots, computes
the resulting lens space ``L(p, q)`` and dual-knot class ``lambda`` for each,
decides which families can produce a given lens space, and regenerates the
``p <= 500`` table of such spaces.
"""

from .characterize import (
    ClassificationReport, FormTest, Witness, classify, fig8_predicate, represent_form,
    trefoil_predicate,
)
from .errors import (
    InvalidDescriptor, LensKnotError, NonCanonical, NonPrimitive, NonUnit, NoWordForm,
    NotLensSurgery, NotPrime, Overflow, ParseError,
)
from .families import (
    FamilyId, FamilyMember, KnotDescriptor, SporadicTuple, abelianization,
    check_constraints, coords_of, descriptor_from_coords, enumerate_family, format_word,
    word_of,
)
from .lens import LambdaClass, LensSpace, canonical_lambda, normalize, orbit_min, same_space
from .modmath import (
    ext_gcd, factorize, is_prime, mod_inv, solve_monic_quadratic_mod, sqrt_mod,
    sqrt_mod_prime,
)
from .surgery import (
    HomologyCoordinates, SurgeryResult, check_surgery_congruences, surgery_lens_space,
)
from .tablegen import (
    DiffReport, TableRow, diff_tables, generate_table, golden_path, parse_golden,
    serialize_table,
)

__version__ = "0.1.0"
