"""Exception types shared across the package."""


class NetfieldError(Exception):
    """Base class for all package errors."""


class NetworkDataError(NetfieldError):
    """Malformed or unusable input data (networks, events, configs)."""


class SnapError(NetfieldError):
    """A point could not be snapped onto the network within the allowed radius."""

    def __init__(self, distance, max_snap):
        self.distance = float(distance)
        self.max_snap = float(max_snap)
        super().__init__(
            f"nearest network point at distance {self.distance:.6g} "
            f"exceeds max_snap {self.max_snap:.6g}"
        )


class UnreachableError(NetfieldError):
    """Two positions lie in different connected components."""


class ParameterError(NetfieldError):
    """Invalid model or field parameters."""


class NotSPDError(NetfieldError):
    """A matrix expected to be symmetric positive definite is not."""

    def __init__(self, message, pivot=None):
        self.pivot = pivot
        super().__init__(message if pivot is None else f"{message} (pivot {pivot})")


class ConvergenceError(NetfieldError):
    """An iterative solver failed to converge."""

    def __init__(self, message, trace=None):
        self.trace = trace or []
        super().__init__(message)
