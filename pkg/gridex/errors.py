from enum import Enum


class LoadErrorCode(Enum):
    NOT_FOUND = "NOT_FOUND"
    EMPTY = "EMPTY"
    MALFORMED = "MALFORMED"
    NON_NUMERIC = "NON_NUMERIC"
    NEGATIVE_VALUE = "NEGATIVE_VALUE"
    DUPLICATE_ID = "DUPLICATE_ID"
    UNKNOWN_SUPPLEMENTARY = "UNKNOWN_SUPPLEMENTARY"
    ZERO_MARGIN = "ZERO_MARGIN"


class GridexError(Exception):
    pass


class MatrixLoadError(GridexError):
    def __init__(self, code: LoadErrorCode, message: str) -> None:
        super().__init__(message)
        self.code = code


class AxisRangeError(GridexError):
    pass


class ProfileError(GridexError):
    pass


class GridRangeError(GridexError):
    pass


class ChainError(GridexError):
    pass


class SearchError(GridexError):
    pass
