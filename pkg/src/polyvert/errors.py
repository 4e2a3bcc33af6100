"""Exception hierarchy shared by every module of the package."""


class PolyvertError(Exception):
    """Base class for all library errors."""

    exit_code = 10


class DimensionMismatch(PolyvertError):
    exit_code = 5


class EmptyPolyhedron(PolyvertError):
    exit_code = 7


class LowDimensional(PolyvertError):
    exit_code = 7


class DegenerateCone(PolyvertError):
    exit_code = 7


class DirectionNotGeneric(PolyvertError):
    exit_code = 7


class Unbounded(PolyvertError):
    exit_code = 6


class PoleAt(PolyvertError):
    """Raised when a linear form of the denominator vanishes at ``z``."""

    exit_code = 8

    def __init__(self, form):
        self.form = tuple(form)
        super().__init__(f"denominator form {[str(c) for c in self.form]} vanishes at z")


class CertificateError(PolyvertError):
    exit_code = 1


class SchemaError(PolyvertError):
    exit_code = 3


class NonRational(SchemaError):
    exit_code = 4
