import json
from typing import Any

from pydantic import BaseModel

from monofock.exporters.base import BaseExporter


def _round(value: Any, digits: int) -> Any:
    if isinstance(value, float):
        return float(f"{value:.{digits}g}")
    if isinstance(value, list):
        return [_round(v, digits) for v in value]
    if isinstance(value, dict):
        return {k: _round(v, digits) for k, v in value.items()}
    return value


class JSONExporter(BaseExporter):

    @property
    def name(self) -> str:
        return "json"

    @property
    def extension(self) -> str:
        return ".json"

    def export(self, payload: BaseModel, digits: int) -> str:
        data = _round(payload.model_dump(mode="json"), digits)
        return json.dumps(data, indent=2) + "\n"
