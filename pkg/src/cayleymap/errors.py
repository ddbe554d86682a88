"""Exception types raised by the numerical kernels.

Everything derives from CayleyMapError so callers (and the CLI, which maps
these to exit code 3) can catch mathematical precondition failures without
swallowing programming errors.
"""


class CayleyMapError(Exception):
    """Base class for mathematical precondition / degeneracy failures."""


class SingularMatrix(CayleyMapError):
    """Linear solve refused: matrix singular or condition number too large."""


class ConvergenceFailure(CayleyMapError):
    """The underlying eigensolver did not converge."""


class DegenerateInput(CayleyMapError):
    """Operation undefined for this input (e.g. roots of the zero polynomial)."""


class DegenerateForm(CayleyMapError):
    """Trace form is singular on the given basis: no Cayley map exists."""


class NotEquivariant(CayleyMapError):
    """Conjugation by the element does not preserve the spanned algebra."""


class ClusterAmbiguity(CayleyMapError):
    """Eigenvalue gaps straddle the clustering tolerance; caller must adjust."""


class NotASubalgebra(CayleyMapError):
    """Selected basis subset is not closed under the commutator."""


class IncompatibleAlgebras(CayleyMapError):
    """Combinator applied to representations of different Lie algebras."""


class NotProportional(CayleyMapError):
    """Trace forms are not scalar multiples of each other."""


class DimensionMismatch(CayleyMapError):
    """Operands live in Clifford algebras over different vector spaces."""


class NotInSpin(CayleyMapError):
    """Element fails the spin-group membership conditions."""


class NotSkew(CayleyMapError):
    """Matrix is not skew-symmetric within tolerance."""


class SingularShift(CayleyMapError):
    """1 + b is singular, so the classical Cayley transform is undefined."""
