"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad ids, parity, file syntax)."""


class PreconditionError(InputError):
    """A documented precondition does not hold, e.g. a non-minimal cover."""


class CapacityError(RuntimeError):
    """The instance exceeds the cap of an exact (exponential) routine."""
