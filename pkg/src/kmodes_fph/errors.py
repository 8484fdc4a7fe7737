"""Exception hierarchy. Everything derives from ``KModesError`` so callers
(the CLI in particular) can catch one type."""


class KModesError(Exception):
    pass


class ParseError(KModesError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyInputError(KModesError, ValueError):
    pass


class SchemaError(KModesError, ValueError):
    pass


class DimensionError(KModesError, ValueError):
    pass


class ConfigError(KModesError, ValueError):
    pass


class ConsistencyError(KModesError, ValueError):
    pass


class EvaluationError(KModesError, ValueError):
    pass


class BoundsError(KModesError, IndexError):
    pass
