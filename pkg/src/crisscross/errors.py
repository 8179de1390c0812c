"""Exception types shared across the package.

The CLI maps these onto exit codes; see cli.py.
"""


class CrissCrossError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(CrissCrossError):
    """A precondition on arguments, shapes, or code parameters is violated."""


class CapacityError(CrissCrossError):
    """An enumeration or candidate set would exceed the configured cap."""


class NotACodewordError(CrissCrossError):
    """Decoding failed: no codeword of the given class explains the input."""


class AmbiguityError(CrissCrossError):
    """Decoding found two or more distinct consistent codewords.

    For genuine codeword inputs this signals a violated code property,
    so it doubles as the "property violation" failure.
    """


class CodePropertyError(AmbiguityError):
    """An internal structural guarantee of a code class failed mid-decode."""


class SamplingError(CrissCrossError):
    """Rejection sampling exhausted its budget without an acceptable draw."""


class NotInstantiableError(CrissCrossError):
    """The requested array cannot carry the syndromes of this code class.

    Raised when a structural prerequisite (not a mere parameter range) fails,
    e.g. an anchor subarray whose shape admits no valid banding.
    """
