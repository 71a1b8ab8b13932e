"""Exception hierarchy shared by all modules.

DomainError covers every precondition violation a caller can trigger with
well-typed but invalid arguments; the CLI maps it to exit code 1.
"""


class DomainError(Exception):
    pass


class LengthMismatch(DomainError):
    pass


class ModulusMismatch(DomainError):
    pass


class RankMismatch(DomainError):
    pass


class ContextMismatch(DomainError):
    pass


class PrecisionExceeded(DomainError):
    pass


class NotAUnit(DomainError):
    pass


class NotTopologicallyNilpotent(DomainError):
    pass


class IncoherentSequence(DomainError):
    def __init__(self, low_level: int, high_level: int):
        self.low_level = low_level
        self.high_level = high_level
        super().__init__(
            f"residue at level {high_level} does not reduce to the one at level {low_level}"
        )


class LevelTooShallow(DomainError):
    pass


class NotInMultiplicativeSet(DomainError):
    pass


class InvalidChain(DomainError):
    pass


class InvalidProfile(DomainError):
    pass
