class GCSetsError(ValueError):
    """Base class for every error raised by this package."""

    kind = "error"


class InvalidInputError(GCSetsError):
    kind = "invalid_input"


class PreconditionError(GCSetsError):
    kind = "precondition"


class ParameterError(PreconditionError):
    """The (d, n) parameters of an ideal cannot be inferred."""

    kind = "parameters"


class MixedDegreeError(ParameterError):
    kind = "mixed_generator_degrees"


class NonPureError(ParameterError):
    kind = "mixed_decomposition"


class DegreeMismatchError(ParameterError):
    kind = "degree_mismatch"


class NonGenericError(PreconditionError):
    kind = "non_generic"
