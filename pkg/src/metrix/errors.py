"""Exception types shared across the engine."""


class MetrixError(Exception):
    """Base class for all engine errors."""


class MalformedConllu(MetrixError):
    def __init__(self, line_no: int, message: str = "bad CoNLL-U line"):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyDocument(MetrixError):
    """Document has no sentence with an alphanumeric token."""


class AnnotatorFailure(MetrixError):
    """Raw-text annotator failed; wraps the provider's diagnostic."""


class LexiconFormatError(MetrixError):
    def __init__(self, line_no: int, message: str = "bad lexicon row"):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NotEnoughTokens(MetrixError):
    """Sequence too short for the requested diversity estimate."""


class FitDiverged(MetrixError):
    """Curve fit left its parameter bounds."""


class DegenerateText(MetrixError):
    """Too few word tokens for readability formulas."""


class ProviderFailure(MetrixError):
    """Embedding provider raised; wraps the underlying error."""


class UnknownCategory(MetrixError):
    pass


class MissingMetric(MetrixError):
    def __init__(self, code: str):
        super().__init__(f"no slice produced metric {code!r}")
        self.code = code


class DuplicateMetric(MetrixError):
    def __init__(self, code: str):
        super().__init__(f"metric {code!r} produced by more than one slice")
        self.code = code


class UnknownMetric(MetrixError):
    def __init__(self, code: str):
        super().__init__(f"metric {code!r} is not in the registry")
        self.code = code


class DegenerateLabels(MetrixError):
    """Feature ranking needs at least two distinct classes."""


class TooFewRows(MetrixError):
    """Feature ranking needs at least two rows per class."""
