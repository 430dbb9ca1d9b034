"""Exception types shared across the library."""


class ContactMechError(Exception):
    """Base class for all library errors."""


class ParseError(ContactMechError):
    """Malformed expression text.

    Carries the 0-based byte offset of the failure and the set of token
    kinds that would have been accepted there.
    """

    def __init__(self, position, expected, message=None):
        self.position = position
        self.expected = frozenset(expected)
        if message is None:
            message = "syntax error at offset %d, expected one of {%s}" % (
                position, ", ".join(sorted(self.expected)))
        super().__init__(message)


class UnknownVariable(ParseError):
    """Expression references a name not declared in the active chart."""

    def __init__(self, name, position):
        self.name = name
        super().__init__(position, {"variable"},
                         "unknown variable %r at offset %d" % (name, position))


class DomainError(ContactMechError):
    """Evaluation left the real domain (log/sqrt of a negative, zero divide).

    ``span`` is the (start, end) byte range of the offending node when the
    value came from a parsed expression, else None.
    """

    def __init__(self, message, span=None):
        self.span = span
        if span is not None:
            message = "%s (at offset %d..%d)" % (message, span[0], span[1])
        super().__init__(message)


class NonFinite(ContactMechError):
    """A NaN or infinity appeared during integration."""

    def __init__(self, step, time):
        self.step = step
        self.time = time
        super().__init__("non-finite state at step %d (t=%.6g)" % (step, time))


class SingularSystem(ContactMechError):
    """A pointwise linear system (musical isomorphism, Hessian) is singular."""


class SingularHessian(SingularSystem):
    pass


class SingularCMatrix(SingularSystem):
    pass


class SingularLagrangian(ContactMechError):
    """Velocity Hessian degenerate; the system belongs to the precontact path."""


class NewtonDivergence(ContactMechError):
    """Local inversion of the Legendre map failed to converge."""

    def __init__(self, last_iterate, residual):
        self.last_iterate = last_iterate
        self.residual = residual
        super().__init__("Newton inversion stalled (residual %.3e)" % residual)


class NotOnSubmanifold(ContactMechError):
    pass


class RankDeficient(ContactMechError):
    pass


class RankUnstable(ContactMechError):
    """Numeric rank disagrees across probe points."""


class BoundaryRank(ContactMechError):
    """A singular value sits on the rank threshold; the rank is unreliable."""


class InadmissibleLift(ContactMechError):
    """The z-part of a lifted field depends on the configuration variables."""


class NotContactomorphism(ContactMechError):
    """A claimed action generator does not preserve the contact form."""


class NearZeroEnergy(ContactMechError):
    def __init__(self, time):
        self.time = time
        super().__init__("energy within tolerance of zero at t=%.6g" % time)


class NoConvergence(ContactMechError):
    """Constraint algorithm did not stabilize within the iteration budget."""


class EmptyFinalManifold(ContactMechError):
    """No probe point satisfies the accumulated constraints."""


class ConfigError(ContactMechError):
    """Scenario file violates the schema.  Message cites the key path."""


class UnknownSuite(ContactMechError):
    pass
