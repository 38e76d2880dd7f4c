class CombinatError(ValueError):
    """Base error of the combinatorics core. Services turn it into status dicts."""

    reason = "invalid_input"


class ShapeParseError(CombinatError):
    reason = "shape_parse_error"

    def __init__(self, text, position, detail):
        self.text = text
        self.position = position
        self.detail = detail
        super().__init__(f"cannot parse {text!r} at position {position}: {detail}")


class ShapeError(CombinatError):
    reason = "invalid_shape"


class TableauError(CombinatError):
    reason = "invalid_tableau"


class ClassStructureError(CombinatError):
    """Raised when a class has zero or several sources/sinks."""

    reason = "class_structure_violated"


class PosetError(CombinatError):
    reason = "invalid_poset"


class FormulaError(CombinatError):
    reason = "formula_not_exact"


class PermutationError(CombinatError):
    reason = "invalid_permutation"


class SizeLimitError(CombinatError):
    reason = "size_limit_exceeded"


USAGE_REASONS = frozenset({
    CombinatError.reason,
    ShapeParseError.reason,
    ShapeError.reason,
    TableauError.reason,
    PermutationError.reason,
    SizeLimitError.reason,
})
