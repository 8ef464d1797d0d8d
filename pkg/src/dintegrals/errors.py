"""Exception hierarchy. Every error raised by the library derives from SemiringError."""


class SemiringError(Exception):
    pass


class MalformedTable(SemiringError):
    """Cayley table has wrong shape or an out-of-range entry."""


class MalformedMap(SemiringError):
    """A candidate derivation map has wrong length or out-of-range values."""


class CapacityExceeded(SemiringError):
    pass


class SemiringMismatch(SemiringError):
    """Operands belong to different semirings."""


class HypothesisUnmet(SemiringError):
    pass


class ClosureViolated(SemiringError):
    """Int_d(S) is not closed under multiplication; the integral family has no total product."""

    def __init__(self, witness):
        self.witness = witness
        a, b = witness
        super().__init__(f"Int_d not closed under multiplication: {a} * {b} is not integrable")


class NotIntegrable(SemiringError):
    def __init__(self, index, char):
        self.index = index
        self.char = char
        super().__init__(
            f"coefficient at index {index} must vanish in characteristic {char} "
            f"({index} = -1 mod {char})"
        )


class BoundTooSmall(SemiringError):
    pass


class InvalidDerivation(SemiringError):
    """A map violates additivity or the Leibniz rule."""

    def __init__(self, identity, x, y):
        self.identity = identity
        self.witness = (x, y)
        super().__init__(f"{identity} fails at ({x}, {y})")
