import pandas as pd
from pydantic import BaseModel

from monofock.exporters.base import BaseExporter
from monofock.logging import InvalidInputError


class CSVExporter(BaseExporter):

    @property
    def name(self) -> str:
        return "csv"

    @property
    def extension(self) -> str:
        return ".csv"

    def export(self, payload: BaseModel, digits: int) -> str:
        to_rows = getattr(payload, "to_rows", None)
        if to_rows is None:
            raise InvalidInputError(f"{type(payload).__name__} has no tabular form; use --format json")
        df = pd.DataFrame(to_rows())
        return df.to_csv(index=False, float_format=f"%.{digits}g", lineterminator="\n")
