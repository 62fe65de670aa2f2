"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A function was called with out-of-range or otherwise invalid parameters."""


class ContractViolation(ValueError):
    """An input value breaks a documented precondition (bad token vertex, bad path, ...)."""


class CapExceeded(RuntimeError):
    """A materialization would exceed the configured vertex cap.

    Callers that only need adjacency checks should switch to the streaming
    neighbor enumeration instead of materializing the token graph.
    """


class ConstructionError(RuntimeError):
    """Internal failure: a constructed certificate did not pass verification.

    Constructions self-check their output before returning; this firing means
    a bug, never bad user input.
    """
