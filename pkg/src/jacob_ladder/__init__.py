"""Jacob's ladder phi1(T) from the Hardy-Littlewood integral of |zeta(1/2+it)|^2."""

from .ladder import Constants, LadderPoint, ReverseSequence, phi1, phi1_derivative, phi1_inverse, reverse_sequence
from .laws import LawId, LawReport, estimate_euler_constant, euler_reference_dirichlet, hli_residual, verify_law
from .primes import prime_pi
from .quadrature import CheckpointStore, QuadratureResult, hl_integral, integrate_z2
from .zeta_core import ZSample, spectral_window, spectral_z, theta, z

__all__ = [
    "CheckpointStore", "Constants", "LadderPoint", "LawId", "LawReport", "QuadratureResult",
    "ReverseSequence", "ZSample", "estimate_euler_constant", "euler_reference_dirichlet",
    "hl_integral", "hli_residual", "integrate_z2", "phi1", "phi1_derivative", "phi1_inverse",
    "prime_pi", "reverse_sequence", "spectral_window", "spectral_z", "theta", "verify_law", "z",
]
