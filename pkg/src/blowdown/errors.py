"""Exception taxonomy shared by every module.

Two intermediate bases exist so the command-line layer can map failures to
stable exit codes: bad input data is a ``ValidationError``, a computation
that cannot proceed on otherwise well-formed input is a ``ComputationError``.
"""


class BlowdownError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(BlowdownError):
    """Input data violates a documented precondition."""


class ComputationError(BlowdownError):
    """Well-formed input on which the requested computation is impossible."""


class InvalidSingularity(ValidationError):
    """(p, q) is not a valid cyclic quotient: needs 0 < q < p and gcd(p, q) = 1."""


class InvalidChain(ValidationError):
    """A Hirzebruch-Jung chain entry is below 2, or the chain is empty."""


class InvalidParameters(ValidationError):
    """Generic precondition failure on numeric arguments."""


class UnrecognizedChain(ValidationError):
    """A chain does not encode a blowdown-type singularity 1/n^2(1, nm-1)."""


class ParityViolation(ValidationError):
    """(euler, signature, b1) are not the invariants of any closed 4-manifold."""


class NonIntegralToddGenus(ValidationError):
    """(c2 + c1^2)/12 is not an integer: not almost-complex surface data."""


class UnknownLabel(ValidationError):
    """A divisor refers to a basis label the lattice does not contain."""


class DuplicateLabel(ValidationError):
    """A basis label would occur twice in one lattice."""


class SingularMatrix(ComputationError):
    """Exact determinant is zero; the linear system has no unique solution."""


class NotContractible(ComputationError):
    """The sub-Gram matrix of the curves to contract is not negative definite."""


class NotGeneralType(ComputationError):
    """c1^2 of the minimal model is not positive, so the Yamabe formula does not apply."""
