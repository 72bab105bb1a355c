from monofock.spectral.commutant import CommutantOrbit, commutant_orbit, counterexample_report
from monofock.spectral.conjecture import IdentityPolynomial, identity_polynomial
from monofock.spectral.eigen import SpectralDecomposition, eigen_decompose, spectrum_support_check
from monofock.spectral.moments import moment_oracle
from monofock.spectral.norms import ShiftMap, norm_of_gapped_sum

__all__ = [
    "CommutantOrbit",
    "commutant_orbit",
    "counterexample_report",
    "IdentityPolynomial",
    "identity_polynomial",
    "SpectralDecomposition",
    "eigen_decompose",
    "spectrum_support_check",
    "moment_oracle",
    "ShiftMap",
    "norm_of_gapped_sum",
]
