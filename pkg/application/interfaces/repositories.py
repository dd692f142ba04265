"""
Repository Interfaces
Abstract data access layer following Repository pattern
"""

from abc import ABC, abstractmethod
from typing import Iterable, List

from application.dto.atlas_row import AtlasRow


class IAtlasRepository(ABC):
    """
    Atlas Repository Interface

    Persists atlas rows in file order.
    """

    @abstractmethod
    def write_rows(self, rows: Iterable[AtlasRow], path: str) -> int:
        """
        Write rows, replacing the file

        Args:
            rows: Rows in output order
            path: Target file

        Returns:
            Number of rows written

        Raises:
            RepositoryError: If the file cannot be written
        """
        pass

    @abstractmethod
    def read_rows(self, path: str) -> List[AtlasRow]:
        """
        Read rows in file order

        Raises:
            RepositoryError: If the file cannot be read or parsed
        """
        pass
