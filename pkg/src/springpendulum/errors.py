"""Domain errors.  The CLI maps :class:`DomainError` to exit status 2."""


class DomainError(ValueError):
    kind = "domain-error"

    def to_json(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class RegimeMismatchError(DomainError):
    kind = "regime-mismatch"


class DegenerateEnergyError(DomainError):
    kind = "degenerate-energy"


class NotFuchsianError(DomainError):
    kind = "not-fuchsian"


class IrrationalExponentError(DomainError):
    kind = "irrational-exponents"


class AlgebraicExtensionRequired(DomainError):
    """A surviving exponential-solution candidate needs arithmetic over an
    algebraic extension of QQ; the candidates are attached, never dropped."""

    kind = "requires-algebraic-extension"

    def __init__(self, message, candidates=(), solutions=()):
        super().__init__(message)
        self.candidates = list(candidates)
        self.solutions = list(solutions)


class InsufficientTruncationError(DomainError):
    kind = "insufficient-truncation"


class LiftError(DomainError):
    kind = "seed-not-liftable"


class IntegrationError(DomainError):
    kind = "integration-failure"
