"""Exception types. Indices carried by errors are 1-based, like the math."""


class ChannelSpaceError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class DomainError(ChannelSpaceError):
    """Input is well-formed but violates a mathematical precondition."""


class NegativeEntry(DomainError):
    def __init__(self, row, col, value):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"negative entry {value} at row {row}, column {col}")


class RowSumViolation(DomainError):
    def __init__(self, row, actual):
        self.row, self.actual = row, actual
        super().__init__(f"row {row} sums to {actual}, expected 1")


class DimensionMismatch(DomainError):
    def __init__(self, left, right):
        self.left, self.right = left, right
        super().__init__(f"dimension mismatch: {left} vs {right}")


class UnstableColumn(DomainError):
    def __init__(self, col):
        self.col = col
        super().__init__(f"column {col} has tied entries")


class UnstableChannel(DomainError):
    def __init__(self, which, col):
        self.which, self.col = which, col
        super().__init__(f"channel {which} is unstable: column {col} has tied entries")


class UnstableInput(DomainError):
    pass


class TooLarge(DomainError):
    def __init__(self, n, limit):
        self.n, self.limit = n, limit
        super().__init__(f"n={n} exceeds the enumeration limit {limit}")


class IndexOutOfRange(DomainError):
    def __init__(self, index, lo, hi):
        self.index = index
        super().__init__(f"index {index} outside [{lo}, {hi}]")


class EmptyCode(DomainError):
    def __init__(self):
        super().__init__("a code must have at least one codeword")


class BadPrior(DomainError):
    pass


class ZeroSamples(DomainError):
    def __init__(self):
        super().__init__("samples must be positive")


class ParseError(ChannelSpaceError):
    exit_code = 3


class OracleMismatch(ChannelSpaceError):
    """Closed form and exhaustive enumeration disagree."""

    exit_code = 2
