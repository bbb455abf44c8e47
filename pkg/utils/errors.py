class GaleDualError(Exception):
    """Base class for every error raised by the toolkit."""


class InputError(GaleDualError):
    pass


class DimensionMismatchError(InputError):
    pass


class VertexRangeError(InputError):
    pass


class DuplicatePointError(InputError):
    pass


class NotExtremeError(InputError):
    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"point {index} is not a vertex: it lies in the convex hull of the others")


class ZeroDirectionError(InputError):
    pass


class DualUndefinedError(GaleDualError):
    def __init__(self, message: str = "dual undefined for the full simplex"):
        super().__init__(message)


class NotAFaceError(GaleDualError):
    pass


class CapExceededError(GaleDualError):
    pass


class BudgetExceededError(GaleDualError):
    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")
