"""Exception types shared by the library and the command-line front end."""


class DomainError(ValueError):
    """Input is well-formed but outside an operation's domain."""


class NotBooleanError(DomainError):
    """Permutation contains a 321 or 3412 pattern."""

    def __init__(self, pattern: str, positions: tuple[int, ...]):
        self.pattern = pattern
        self.positions = positions
        super().__init__(f"not boolean: pattern {pattern} at positions {positions}")


class CrowdedError(DomainError):
    """Integer set packs more than x+1 values into some window of 2x+1 integers."""


class DegreeLimitError(DomainError):
    """Exhaustive enumeration requested beyond its degree guard."""


class ParseError(ValueError):
    """Malformed textual input; carries the offending token position when known."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at token {position})"
        super().__init__(message)
