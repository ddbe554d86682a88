"""Numerical Cayley maps from matrix groups to their Lie algebras.

The central operation projects a represented group element orthogonally onto
the image of the Lie algebra, using the trace form tr(AB) on endomorphisms.
Submodules:

  linalg          dense complex primitives (solve, det, spectra, roots, exp)
  representation  the projection map, its Jacobian, Jordan decompositions
  catalog         concrete groups, sl2 irreps, sum/tensor/dual combinators
  clifford        Clifford/exterior algebra, spin group, Cayley transform
  degree          fiber polynomials and mapping-degree evidence
  suites          seeded property-verification suites
  cli             command-line entry point
"""

from .catalog import make_gl, make_sl, make_sl2_irrep, make_so
from .representation import (
    AlgebraVector,
    GroupElement,
    Representation,
    cayley,
    cayley_jacobian,
    psi,
)

__all__ = [
    "AlgebraVector",
    "GroupElement",
    "Representation",
    "cayley",
    "cayley_jacobian",
    "psi",
    "make_gl",
    "make_sl",
    "make_sl2_irrep",
    "make_so",
]

__version__ = "0.1.0"
