"""Exception types shared across the package."""


class SchubertError(Exception):
    """Base class for all domain errors raised by this package."""


class NonSquareError(SchubertError):
    def __init__(self, nrows, ncols):
        super().__init__(f"matrix is not square: {nrows} rows, {ncols} columns")
        self.nrows = nrows
        self.ncols = ncols


class DiagonalNotTwoError(SchubertError):
    def __init__(self, label, value):
        super().__init__(f"diagonal entry at {label!r} is {value}, expected 2")
        self.label = label
        self.value = value


class PositiveOffDiagonalError(SchubertError):
    def __init__(self, s, t, value):
        super().__init__(f"off-diagonal entry ({s!r},{t!r}) is {value}, expected <= 0")
        self.s = s
        self.t = t
        self.value = value


class ZeroAsymmetryError(SchubertError):
    def __init__(self, s, t):
        super().__init__(
            f"entry ({s!r},{t!r}) is zero but ({t!r},{s!r}) is not (or vice versa)"
        )
        self.s = s
        self.t = t


class UnknownLabelError(SchubertError):
    def __init__(self, label):
        super().__init__(f"unknown generator label {label!r}")
        self.label = label


class TooLargeError(SchubertError):
    def __init__(self, size, cap):
        super().__init__(f"index set of size {size} exceeds search cap {cap}")
        self.size = size
        self.cap = cap


class MixedContextsError(SchubertError):
    def __init__(self):
        super().__init__("elements belong to different Cartan matrices")


class NotInSupportError(SchubertError):
    def __init__(self, label):
        super().__init__(f"generator {label!r} is not in the support of the element")
        self.label = label


class NotInIntervalError(SchubertError):
    def __init__(self, word):
        super().__init__(f"element {' '.join(word) or 'e'} is not in the interval")
        self.word = word


class LengthCapExceededError(SchubertError):
    def __init__(self, length, cap):
        super().__init__(f"element length {length} exceeds cap {cap}")
        self.length = length
        self.cap = cap


class EnumerationCapExceededError(SchubertError):
    def __init__(self, cap):
        super().__init__(f"group enumeration exceeded element cap {cap}")
        self.cap = cap


class NotACoverError(SchubertError):
    def __init__(self):
        super().__init__("second element does not cover the first in Bruhat order")


class NotFullySupportedError(SchubertError):
    def __init__(self, missing):
        super().__init__(f"element is not fully supported; missing {sorted(missing)}")
        self.missing = missing


class MalformedOracleError(SchubertError):
    """The given product table is not the cohomology of any Schubert variety."""
