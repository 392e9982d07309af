"""Exception hierarchy shared by every gyrolab module."""


class GyroError(Exception):
    """Base class for all gyrolab errors."""


class InvalidElementError(GyroError, ValueError):
    """An element lies outside the carrier of its model (e.g. |a| >= 1 on the disk)."""


class MalformedTableError(GyroError, ValueError):
    """A Cayley table is not square or has entries outside {0..n-1}."""


class TableParseError(MalformedTableError):
    """A ``.gyro`` file could not be parsed.

    ``line`` and ``column`` are 1-based positions in the source text.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InvalidTableError(GyroError):
    """An operation needs a verified gyrogroup table and got something else."""


class EmptySubsetError(GyroError, ValueError):
    pass


class NotASubgyrogroupError(GyroError):
    pass


class NotAnLSubgyrogroupError(GyroError):
    pass


class OrderTooLargeError(GyroError, ValueError):
    pass


class IdentityNotInSubsetError(GyroError, ValueError):
    pass


class NotSymmetricError(GyroError, ValueError):
    pass


class PointUncoveredError(GyroError, ValueError):
    pass
