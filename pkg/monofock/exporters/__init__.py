from typing import Optional

from monofock.exporters.base import BaseExporter
from monofock.exporters.csv_exporter import CSVExporter
from monofock.exporters.json_exporter import JSONExporter
from monofock.logging import InvalidInputError


class ExporterRegistry:
    _exporters: list[BaseExporter] = []

    @classmethod
    def register(cls, exporter: BaseExporter) -> None:
        cls._exporters.append(exporter)

    @classmethod
    def get_exporter(cls, format_name: str) -> Optional[BaseExporter]:
        for exporter in cls._exporters:
            if exporter.can_export(format_name):
                return exporter
        return None

    @classmethod
    def get_supported_formats(cls) -> list[str]:
        return [exporter.name for exporter in cls._exporters]


# Register default exporters
ExporterRegistry.register(JSONExporter())
ExporterRegistry.register(CSVExporter())


def get_exporter(format_name: str) -> BaseExporter:
    exporter = ExporterRegistry.get_exporter(format_name)
    if exporter is None:
        supported = ", ".join(ExporterRegistry.get_supported_formats())
        raise InvalidInputError(f"Unsupported format '{format_name}'. Supported: {supported}")
    return exporter
