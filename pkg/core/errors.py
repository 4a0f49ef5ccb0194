"""
Exception types raised by the optical bench.
"""


class BenchError(Exception):
    """
    Base class for domain errors of the optical bench.
    """


class BrokenPhaseError(BenchError, ValueError):
    """
    Raised when the PT-symmetric medium is outside the unbroken phase,
    i.e. eta2 <= eta1*|sin(phi1)|, where the closed-form propagator is invalid.
    """

    def __init__(self, eta1: float, phi1: float, eta2: float):
        self.eta1 = eta1
        self.phi1 = phi1
        self.eta2 = eta2
        super().__init__(f"broken PT phase: eta2 <= eta1*|sin(phi1)| (eta1={eta1}, phi1={phi1}, eta2={eta2})")


class ZeroIntensityError(BenchError, ValueError):
    """
    Raised when detection statistics are requested for a record without intensity.
    """


class DomainTooSmallError(BenchError, ValueError):
    """
    Raised when beams do not fit well inside the transverse simulation domain.
    """
