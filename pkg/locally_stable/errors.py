from typing import Optional


class LocallyStableError(Exception):
    """Base class for every error the library raises on bad input"""


class ParameterError(LocallyStableError, ValueError):
    """Construction parameters are unusable (unknown family, wrong arity)"""


class HypothesisError(ParameterError):
    """Construction parameters violate a theorem hypothesis"""

    def __init__(self, family: str, hypothesis: str, theorem: str, detail: str):
        self.family = family
        self.hypothesis = hypothesis
        self.theorem = theorem
        super().__init__(
            f"{family}: hypothesis {hypothesis} violated ({theorem}): {detail}"
        )


class ShapeMismatchError(LocallyStableError, ValueError):
    pass


class OrthogonalityError(LocallyStableError, ValueError):
    """Two states of a set overlap beyond tolerance"""

    def __init__(self, pair: tuple[int, int], overlap: float):
        self.pair = pair
        self.overlap = overlap
        super().__init__(
            f"states {pair[0]} and {pair[1]} are not orthogonal (|overlap| = {overlap:.3g})"
        )


class DocumentError(LocallyStableError, ValueError):
    """Malformed interchange document, with the JSON path of the offending node"""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class LabelRangeError(DocumentError):
    def __init__(self, label: int, dim: int, party: int, path: Optional[str] = None):
        self.label = label
        self.dim = dim
        self.party = party
        super().__init__(f"label {label} ≥ dim {dim} at party {party}", path)


class UnsupportedFormatError(DocumentError):
    def __init__(self, version: object, path: Optional[str] = "format_version"):
        self.version = version
        super().__init__(f"unsupported format_version {version!r}", path)
