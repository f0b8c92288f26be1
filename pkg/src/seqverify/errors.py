"""Exception types shared across the package.

The CLI maps these onto exit codes: config errors exit 2, data errors exit 3,
numeric errors exit 4.
"""


class SeqVerifyError(Exception):
    """Base class for all library errors."""


class InvalidConfigError(SeqVerifyError):
    """A configuration value is out of range or unknown."""


class DataError(SeqVerifyError):
    """Base class for dataset / file format problems."""


class ParseError(DataError):
    """Malformed input file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimensionMismatchError(DataError):
    """Vectors, records or network inputs disagree on dimensionality."""


class ZeroVectorError(DataError):
    """A feature vector with (near-)zero norm cannot be normalized."""


class InsufficientIdentitiesError(DataError):
    """Too few identities (or identities with enough tracks) for a split."""


class MissingSplitError(DataError):
    """The dataset has no train/query/gallery split but one is required."""


class NoPositivePairAvailableError(DataError):
    """No identity owns two tracks, so positive pairs cannot be sampled."""


class MissingMetadataError(DataError):
    """Corruption metadata was requested but the dataset carries none."""


class QueryWithoutMatchError(DataError):
    """A query identity has no matching gallery track."""


class FormatVersionMismatchError(DataError):
    """A checkpoint file is corrupt or written by an unknown format version."""


class NumericError(SeqVerifyError):
    """Base class for numeric failures."""


class NonFiniteInputError(NumericError):
    """An input vector or Q-value contains NaN or infinity."""


class AllWeightsZeroError(NumericError):
    """History weights summed to zero; unreachable for finite Q-values."""


class SteppedTerminalEpisodeError(SeqVerifyError):
    """step() was called on an episode that already terminated."""
