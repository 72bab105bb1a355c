from abc import ABC, abstractmethod

from pydantic import BaseModel


class BaseExporter(ABC):

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def extension(self) -> str:
        pass

    @abstractmethod
    def export(self, payload: BaseModel, digits: int) -> str:
        pass

    def can_export(self, format_name: str) -> bool:
        return format_name.lower() == self.name
