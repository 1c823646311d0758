class LRESortError(Exception):
    pass


class DomainError(LRESortError, ValueError):
    pass


class InvalidPermutationError(DomainError):
    pass


class InvalidMoveError(DomainError):
    pass


class UnsupportedSizeError(DomainError):
    pass


class TraceMismatchError(LRESortError):
    """A constructed trace disagrees with its closed-form count."""


class SearchAborted(LRESortError):
    """A search limit was hit before the target was reached.

    ``completed_depth`` is the deepest BFS level fully expanded, so the true
    distance is strictly greater than it.
    """

    def __init__(self, reason: str, completed_depth: int, states_expanded: int):
        super().__init__(f"{reason} (completed depth {completed_depth}, {states_expanded} states expanded)")
        self.reason = reason
        self.completed_depth = completed_depth
        self.states_expanded = states_expanded


class SearchExhausted(LRESortError):
    pass
