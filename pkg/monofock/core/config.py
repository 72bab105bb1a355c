from functools import lru_cache
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, AliasChoices, field_validator


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="monofock", description="Application name")
    app_version: str = Field(default="0.1.0", description="Application version")
    debug: bool = Field(default=False, description="Debug mode")
    environment: str = Field(default="development", description="Environment (development/staging/production)")

    # HTTP surface
    host: str = Field(default="0.0.0.0", description="Server host")
    port: int = Field(default=8005, description="Server port")
    cors_origins: str = Field(default="*", description="Comma-separated list of allowed CORS origins")

    # Numerics
    precision_bits: int = Field(default=256, description="Working binary precision of atoms and weights")
    root_refine_bits: int = Field(default=96, description="Bisection depth used when refining polynomial roots")
    eigen_residual_tol: float = Field(default=1e-12, description="Max residual |Av - lambda v| relative to |A|")
    oracle_tol: float = Field(default=1e-9, description="Tolerance of eigen-oracle comparisons")
    route_tol: float = Field(default=1e-10, description="Tolerance of triple-route comparisons")

    # Caps - MONOFOCK_CAP_N overrides the binomial cap
    binomial_cap_n: int = Field(
        default=24,
        validation_alias=AliasChoices("binomial_cap_n", "MONOFOCK_CAP_N"),
        description="Largest n accepted by binomial_measure",
    )
    invariant_cap: int = Field(default=20, description="Largest |I| for invariant_subspace_matrix")
    norm_trunc_cap: int = Field(default=12, description="Largest label max(I) for norm_of_gapped_sum")
    mgf_cap: int = Field(default=8, description="Largest m for mgf_pair")
    interlacing_cap: int = Field(default=6, description="Largest n for interlacing_check")
    structure_cap: int = Field(default=7, description="Largest n for structure_check")
    measure_from_polys_cap: int = Field(default=6, description="Largest m for measure_from_polys")
    eigen_cap: int = Field(default=10, description="Largest n for dense eigen checks")
    moment_cap_n: int = Field(default=16, description="Largest n for moment_oracle")
    moment_cap_k: int = Field(default=32, description="Largest k for moment_oracle")
    identity_cap: int = Field(default=6, description="Largest n for identity_polynomial")
    commutant_dim_cap: int = Field(default=64, description="Largest matrix dimension for commutant_orbit")
    plot_cap_n: int = Field(default=12, description="Largest n for stem plots")

    # Output
    output_digits: int = Field(default=10, description="Significant digits in numeric output")
    report_path: str = Field(default="verification-report.json", description="Default verification report path")

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")
    log_format: str = Field(default="text", description="Log format (json/text)")

    @field_validator("precision_bits")
    @classmethod
    def _at_least_double(cls, value: int) -> int:
        if value < 53:
            raise ValueError("precision_bits must be at least 53")
        return value

    @property
    def cors_origins_list(self) -> list[str]:
        """Parse CORS origins from comma-separated string."""
        if self.cors_origins == "*":
            return ["*"]
        return [origin.strip() for origin in self.cors_origins.split(",")]


@lru_cache
def get_settings() -> Settings:
    return Settings()


# Convenience access
settings = get_settings()
