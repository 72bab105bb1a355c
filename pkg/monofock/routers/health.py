from fastapi import APIRouter

from monofock.core.config import settings
from monofock.schemas import HealthResponse


router = APIRouter(tags=["Health"])


@router.get("/health", response_model=HealthResponse)
def health_check():
    return HealthResponse(
        status="healthy",
        version=settings.app_version,
        environment=settings.environment,
        precision_bits=settings.precision_bits,
    )
