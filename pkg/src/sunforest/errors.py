"""Exception types shared across the package."""


class DivisionError(ArithmeticError):
    """Raised when an integer-coefficient polynomial division is not exact."""


class ParseError(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"at offset {offset}: {message}")
        self.offset = offset
        self.message = message


class DomainError(ValueError):
    """Input outside the domain of a builder or matrix-tree routine."""


class CapExceeded(RuntimeError):
    def __init__(self, edges: int, cap: int):
        super().__init__(f"graph has {edges} edges, enumeration cap is {cap}")
        self.edges = edges
        self.cap = cap
