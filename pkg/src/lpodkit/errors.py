class LpodError(Exception):
    """Base class for all errors raised by lpodkit."""


class SignatureTooLarge(LpodError):
    def __init__(self, size: int, cap: int):
        super().__init__(
            f"signature has {size} atoms, enumeration cap is {cap} "
            "(raise it with --max-atoms or LPODKIT_MAX_ATOMS)"
        )
        self.size = size
        self.cap = cap


class NotAnLpod(LpodError, ValueError):
    """A statement does not have the shape required by the called procedure."""


class UnsupportedConstruct(LpodError, ValueError):
    pass


class NameCollision(LpodError):
    pass


class NotPositive(LpodError, ValueError):
    pass


class NotAnswerSet(LpodError, ValueError):
    pass


class Unsatisfied(LpodError, ValueError):
    pass


class EmptyHead(LpodError, ValueError):
    pass
