class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class InternalError(RuntimeError):
    """A computation reached a state that should be impossible."""
