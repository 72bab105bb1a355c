from fastapi import APIRouter

from monofock.schemas import ErrorResponse, VerificationReport
from monofock.services.verification import run_suite


router = APIRouter(prefix="/verify", tags=["Verification"], responses={400: {"model": ErrorResponse}})


@router.post("/{suite}", response_model=VerificationReport)
def verify_suite(suite: str):
    """Run an invariant suite; failures are reported in the body, not as an error status."""
    return run_suite(suite)
