"""Exception hierarchy.

Every error carries a short ``kind`` string; the command-line front end
prints it as ``ERROR:<kind>:<message>``.
"""


class FrameSpecError(ValueError):
    kind = "error"


class ValidationError(FrameSpecError):
    kind = "validation"


class DimensionError(ValidationError):
    kind = "dimension"


class SingularMatrixError(FrameSpecError):
    kind = "singular"

    def __init__(self, message, condition=float("inf")):
        super().__init__(message)
        self.condition = condition


class NotAFrameError(FrameSpecError):
    kind = "not-a-frame"


class NotARieszBasisError(FrameSpecError):
    kind = "not-riesz"


class HypothesisError(FrameSpecError):
    """A localization criterion was invoked outside its hypotheses."""

    kind = "hypothesis"


class DualityError(HypothesisError):
    kind = "duality"


class CriterionVoidError(HypothesisError):
    kind = "criterion-void"
