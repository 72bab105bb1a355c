from monofock.measures.atomic import (
    AtomicMeasure,
    bernoulli,
    cauchy_transform,
    moments,
    monotone_convolve,
    point_mass,
    reciprocal_cauchy,
)
from monofock.measures.arcsine import ArcsineLaw, kolmogorov_distance
from monofock.measures.binomial import (
    BinomialLawRecord,
    binomial_measure,
    child_weight,
    children_atoms,
    clt_table,
    endpoint_bounds,
    max_atom,
    printed_weight_formula,
)

__all__ = [
    "AtomicMeasure",
    "bernoulli",
    "cauchy_transform",
    "moments",
    "monotone_convolve",
    "point_mass",
    "reciprocal_cauchy",
    "ArcsineLaw",
    "kolmogorov_distance",
    "BinomialLawRecord",
    "binomial_measure",
    "child_weight",
    "children_atoms",
    "clt_table",
    "endpoint_bounds",
    "max_atom",
    "printed_weight_formula",
]
