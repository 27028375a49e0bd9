"""Exception types shared across the package."""


class CapacityError(Exception):
    """A request exceeds a table or integer-width capacity budget."""
