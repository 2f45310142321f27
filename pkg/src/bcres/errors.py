"""Exception types shared across the toolkit."""


class InputError(ValueError):
    """Malformed construction data: bad labels, shapes, or schema violations."""


class CircuitAxiomError(InputError):
    """A claimed circuit family violates the circuit elimination axiom."""

    def __init__(self, c1, c2, e):
        self.witness = (sorted(c1), sorted(c2), e)
        super().__init__(
            "circuit elimination fails for %s and %s at common element %r"
            % (sorted(c1), sorted(c2), e)
        )


class LoopError(ValueError):
    """An operation that requires a loopless matroid met a loop."""


class BoundError(RuntimeError):
    """A size or oracle bound was exceeded; the verdict is inconclusive, never wrong."""
