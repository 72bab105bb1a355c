"""
Stem plots of the vacuum distribution of S_n.

Output is SVG with a fixed hash salt and no date metadata, so the same
inputs give the same bytes.
"""

from math import sqrt
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from pydantic import BaseModel, Field, field_validator

from monofock.core.config import settings
from monofock.logging import InvalidInputError, check_cap, logger
from monofock.measures.arcsine import EDGE, ArcsineLaw
from monofock.measures.atomic import FLOAT_BITS
from monofock.measures.binomial import binomial_measure

SVG_HASH_SALT = "monofock"
DPI = 100


class PlotSpec(BaseModel):
    n: int = Field(..., ge=1, description="Number of summands")
    width: int = Field(640, ge=100, description="Width in pixels")
    height: int = Field(400, ge=100, description="Height in pixels")
    output: Path = Field(..., description="SVG output path")
    arcsine: bool = Field(False, description="Rescale atoms by sqrt(n) and overlay the arcsine density")

    @field_validator("output")
    @classmethod
    def _svg_only(cls, value: Path) -> Path:
        if value.suffix.lower() != ".svg":
            raise ValueError("plots are written as .svg")
        return value


def stem_plot(spec: PlotSpec) -> Path:
    """Vertical stems at the atoms of mu_n with heights equal to the weights."""
    check_cap("n", spec.n, settings.plot_cap_n)
    mu = binomial_measure(spec.n, FLOAT_BITS).measure
    scale = sqrt(spec.n) if spec.arcsine else 1.0
    atoms = mu.atoms_float / scale
    weights = mu.weights_float

    plt.rcParams["svg.hashsalt"] = SVG_HASH_SALT
    fig, ax = plt.subplots(figsize=(spec.width / DPI, spec.height / DPI), dpi=DPI)
    markers, stems, base = ax.stem(atoms, weights, basefmt=" ")
    plt.setp(stems, linewidth=1.0)
    plt.setp(markers, markersize=3)

    reach = max(float(np.max(np.abs(atoms))), EDGE if spec.arcsine else 0.0) * 1.1
    ax.set_xlim(-reach, reach)
    ax.set_ylim(0, float(np.max(weights)) * 1.15)
    ax.axvline(0, color="grey", linewidth=0.5)
    ax.set_xlabel("atom / sqrt(n)" if spec.arcsine else "atom")
    ax.set_ylabel("weight")
    ax.set_title(f"Vacuum distribution of S_{spec.n}")

    if spec.arcsine:
        grid = np.linspace(-EDGE, EDGE, 401)[1:-1]
        density_ax = ax.twinx()
        density_ax.plot(grid, ArcsineLaw().density(grid), color="tab:orange", linewidth=1.0)
        density_ax.set_ylabel("arcsine density")
        density_ax.set_ylim(bottom=0)

    fig.tight_layout()
    try:
        spec.output.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(spec.output, format="svg", metadata={"Date": None})
    except OSError as e:
        raise InvalidInputError(f"Cannot write plot to {spec.output}: {e}")
    finally:
        plt.close(fig)
    logger.debug(f"Stem plot of mu_{spec.n} written to {spec.output}")
    return spec.output
