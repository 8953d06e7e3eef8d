"""Exception hierarchy."""


class WignerCertError(Exception):
    """Base class for all errors raised by wignercert."""


class DimensionError(WignerCertError, ValueError):
    pass


class NotSymmetricError(WignerCertError, ValueError):
    pass


class NotHermitianError(WignerCertError, ValueError):
    pass


class NotPositiveDefiniteError(WignerCertError, ValueError):
    """Raised for singular or indefinite matrices where an SPD one is required."""


class PairingError(WignerCertError, ValueError):
    """Eigenvalues of B J^{-1} do not come in clean +-i lambda pairs."""


class GridError(WignerCertError, ValueError):
    """Grid mismatch, reciprocity violation or unresolvable content."""


class ZeroMassError(WignerCertError, ValueError):
    pass


class AliasingError(WignerCertError, ValueError):
    """Too much mass sits in the boundary shell for a spectral operation."""


class EntropyClippingError(WignerCertError, ValueError):
    """A density is too negative for its entropy to be meaningful."""


class RouteDisagreementError(WignerCertError, RuntimeError):
    """Two independent routes to the same verdict disagree."""


class StateSpecError(WignerCertError, ValueError):
    pass
