"""Exception types shared across the pipeline."""


class HeartRulesError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(HeartRulesError):
    """Invalid attribute schema or schema/data mismatch."""


class DataError(HeartRulesError):
    """Malformed input data (bad row width, illegal label, unparsable cell)."""


class PipelineError(HeartRulesError):
    """A pipeline stage rejected its input.

    Carries the stage name so CLI/service errors can say where things broke.
    """

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"{stage}: {message}")
