"""Typed errors shared across the package."""


class InputError(ValueError):
    """A caller-supplied argument is malformed or out of range."""


class UnsupportedStructureError(TypeError):
    """The operation needs structure the object does not carry."""


class NoOrthocomplementError(UnsupportedStructureError):
    """An orthocomplement is required but the lattice has none."""


class InvalidFamilyError(ValueError):
    """A threshold/value assignment violates the spectral-family laws."""
