from typing import Any, Literal, Optional, Union
from pydantic import BaseModel, Field

# =============================================================================
# Measure Schemas
# =============================================================================

class AtomicMeasureDump(BaseModel):
    atoms: list[Union[float, str]] = Field(
        ..., description="Atoms in ascending order; decimal strings when full precision is requested"
    )
    weights: list[Union[float, str]] = Field(..., description="Positive weights, same length as atoms")
    precision_bits: int = Field(..., description="Working precision the measure was computed at")
    label: str = Field("", description="Measure label")
    n: Optional[int] = Field(None, description="Trial count for monotone binomial laws")

    class Config:
        json_schema_extra = {
            "example": {
                "atoms": [-1.0, 1.0],
                "weights": [0.5, 0.5],
                "precision_bits": 256,
                "label": "mu_1",
                "n": 1
            }
        }

    def to_rows(self) -> list[dict[str, float]]:
        return [{"atom": a, "weight": w} for a, w in zip(self.atoms, self.weights)]


class CltRow(BaseModel):
    n: int = Field(..., description="Number of summands")
    max_atom: float = Field(..., description="Largest atom of mu_n")
    ratio: float = Field(..., description="Largest atom divided by sqrt(n)")
    ks_distance: float = Field(..., description="Kolmogorov distance to the arcsine law at scale sqrt(n)")


class CltTable(BaseModel):
    rows: list[CltRow] = Field(default_factory=list)
    ratio_increasing: bool = Field(..., description="Ratio column strictly increasing")
    ratio_below_sqrt2: bool = Field(..., description="Every ratio below sqrt(2)")

    @classmethod
    def from_rows(cls, rows: list[CltRow]) -> "CltTable":
        ratios = [row.ratio for row in rows]
        return cls(
            rows=rows,
            ratio_increasing=all(b > a for a, b in zip(ratios, ratios[1:])),
            ratio_below_sqrt2=all(r < 2**0.5 for r in ratios),
        )

    def to_rows(self) -> list[dict[str, Any]]:
        return [row.model_dump() for row in self.rows]


# =============================================================================
# Polynomial Schemas
# =============================================================================

class PolynomialDump(BaseModel):
    degree: int = Field(..., description="Degree; -1 for the zero polynomial")
    coefficients: list[str] = Field(..., description="Ascending integer coefficients as decimal strings")
    name: str = Field("", description="Polynomial name")

    class Config:
        json_schema_extra = {
            "example": {
                "degree": 4,
                "coefficients": ["1", "0", "-3", "0", "1"],
                "name": "P_2"
            }
        }


class PolynomialPairDump(BaseModel):
    m: int = Field(..., description="Index of the moment generating function Q_m / P_m")
    Q: PolynomialDump
    P: PolynomialDump
    p_roots: Optional[list[Union[float, str]]] = Field(None, description="Real roots of P_m in ascending order")


# =============================================================================
# Spectral Schemas
# =============================================================================

class NormReport(BaseModel):
    indices: list[int] = Field(..., description="Index set I")
    norm: float = Field(..., description="Operator norm of S_I")
    equals_contiguous: bool = Field(..., description="Norm equals the largest atom of mu_|I|")
    relabeling_verified: bool = Field(..., description="S_I on tuples over I matches S_|I| after relabeling")
    truncated_top_eigenvalue: Optional[float] = Field(None, description="Top eigenvalue of the full truncated S_I")
    norm_at_precision: Optional[str] = Field(
        None, description="Largest atom of mu_|I| as a decimal string at the requested precision"
    )

    class Config:
        json_schema_extra = {
            "example": {
                "indices": [1, 3],
                "norm": 1.618033988749895,
                "equals_contiguous": True,
                "relabeling_verified": True,
                "truncated_top_eigenvalue": 1.618033988749895
            }
        }


class BlockSpectrum(BaseModel):
    basis: list[list[int]] = Field(..., description="Basis tuples spanning the block")
    eigenvalues: list[float]


class CounterexampleReport(BaseModel):
    indices: list[int]
    dimension: int
    orbit_dimension: int = Field(..., description="Dimension of the commutant orbit of the vacuum")
    cyclic: bool
    e2_coordinate: str = Field(..., description="Coordinate of e_2 shared by every orbit vector, or \"nonzero\"")
    forced_zeros: list[list[int]] = Field(..., description="(row, column) pairs vanishing on every commuting matrix")
    orbit_basis: list[list[str]] = Field(..., description="Exact orthogonal basis of the orbit, rational strings")
    blocks: list[BlockSpectrum] = Field(default_factory=list)


# =============================================================================
# Verification Schemas
# =============================================================================

class CheckResult(BaseModel):
    name: str = Field(..., description="Check name")
    inputs: dict[str, Any] = Field(default_factory=dict)
    status: Literal["pass", "fail", "flagged"]
    details: dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    suite: str
    checks: list[CheckResult] = Field(default_factory=list)
    passed: int = 0
    failed: int = 0
    flagged: int = 0
    elapsed_seconds: float = 0.0

    class Config:
        json_schema_extra = {
            "example": {
                "suite": "poly",
                "checks": [
                    {"name": "structure", "inputs": {"n": 1}, "status": "pass", "details": {}}
                ],
                "passed": 1,
                "failed": 0,
                "flagged": 0,
                "elapsed_seconds": 0.01
            }
        }


# =============================================================================
# Health Check Schemas
# =============================================================================

class HealthResponse(BaseModel):
    """Health check response."""
    status: str = Field(..., description="Overall health status")
    version: str = Field(..., description="Application version")
    environment: str = Field(..., description="Deployment environment")
    precision_bits: int = Field(..., description="Configured working precision")


class ErrorResponse(BaseModel):
    error: str = Field(..., description="Error message")
    details: Optional[dict[str, Any]] = Field(None, description="Structured error context")
