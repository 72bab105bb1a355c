from typing import Optional

from fastapi import APIRouter, Query

from monofock.core.config import settings
from monofock.fock.basis import IndexSet
from monofock.measures.binomial import binomial_measure, clt_table
from monofock.poly.mgf import mgf_pair
from monofock.schemas import (
    AtomicMeasureDump,
    CltTable,
    CounterexampleReport,
    ErrorResponse,
    NormReport,
    PolynomialPairDump,
)
from monofock.spectral.commutant import counterexample_report
from monofock.spectral.norms import norm_of_gapped_sum


router = APIRouter(tags=["Measures"], responses={400: {"model": ErrorResponse}, 500: {"model": ErrorResponse}})


@router.get("/distribution/{n}", response_model=AtomicMeasureDump)
def get_distribution(n: int, precision_bits: Optional[int] = Query(None, ge=53)):
    record = binomial_measure(n, precision_bits or settings.precision_bits)
    return AtomicMeasureDump(**record.measure.to_dump(full_precision=precision_bits is not None), n=n)


@router.get("/clt", response_model=CltTable)
def get_clt(max_n: int = Query(..., ge=1)):
    return CltTable.from_rows(clt_table(max_n))


@router.get("/norm", response_model=NormReport)
def get_norm(indices: str = Query(..., description="Comma-separated index set, e.g. 1,3")):
    return norm_of_gapped_sum(IndexSet.parse(indices))


@router.get("/polys/{m}", response_model=PolynomialPairDump)
def get_polys(m: int):
    return PolynomialPairDump(**mgf_pair(m).to_dump())


@router.get("/counterexample", response_model=CounterexampleReport)
def get_counterexample():
    return counterexample_report()
