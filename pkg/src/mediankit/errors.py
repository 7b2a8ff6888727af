"""Exception hierarchy.  Witnesses are plain tuples of element indices."""


class MedianKitError(Exception):
    pass


class TableNotClosed(MedianKitError):
    def __init__(self, index, value, n):
        self.index, self.value, self.n = index, value, n
        super().__init__(f"table entry {index} = {value} is outside 0..{n - 1}")


class AxiomViolation(MedianKitError):
    def __init__(self, axiom, witness):
        self.axiom, self.witness = axiom, tuple(witness)
        super().__init__(f"{axiom} law fails at {self.witness}")


class IdentityViolation(MedianKitError):
    def __init__(self, which, witness):
        self.which, self.witness = which, tuple(witness)
        super().__init__(f"derived identity '{which}' fails at {self.witness}")


class NotMedianSemilattice(MedianKitError):
    def __init__(self, reason, witness=()):
        self.reason, self.witness = reason, tuple(witness)
        super().__init__(f"{reason} at {self.witness}")


class NotAPoset(MedianKitError):
    pass


class NotConservative(MedianKitError):
    def __init__(self, witness, median):
        self.witness, self.median = tuple(witness), median
        super().__init__(f"m{self.witness} = {median} lies outside the triple")


class TooSmall(MedianKitError):
    pass


class NoChainOrdering(MedianKitError):
    pass


class SizeLimit(MedianKitError):
    def __init__(self, what, size, limit):
        self.what, self.size, self.limit = what, size, limit
        super().__init__(f"{what}: search space {size} exceeds 2^{limit}")


class NotAHom(MedianKitError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"median is not preserved at {self.witness}")


class RoundTripFailure(MedianKitError):
    pass
