"""
JSON-Lines Atlas Repository
Implements IAtlasRepository on flat JSON-lines files
"""

import json
import logging
from pathlib import Path
from typing import Iterable, List

from application.dto.atlas_row import AtlasRow
from application.interfaces.repositories import IAtlasRepository
from domain.exceptions.atlas_errors import RepositoryError, ValidationError


logger = logging.getLogger(__name__)


class JsonLinesAtlasRepository(IAtlasRepository):
    """
    JSON-Lines Atlas Repository

    One row per line, UTF-8, keys in the fixed row order and compact
    separators, so equal rows always serialize to equal bytes.
    """

    def encode(self, row: AtlasRow) -> str:
        """Serialize a single row without the trailing newline"""
        return json.dumps(row.to_dict(), separators=(",", ":"), sort_keys=False, ensure_ascii=False)

    def write_rows(self, rows: Iterable[AtlasRow], path: str) -> int:
        """
        Write rows, replacing the file

        Raises:
            RepositoryError: If the file cannot be written
        """
        target = Path(path)
        count = 0
        try:
            if target.parent and not target.parent.exists():
                target.parent.mkdir(parents=True, exist_ok=True)
            with open(target, "w", encoding="utf-8", newline="\n") as handle:
                for row in rows:
                    handle.write(self.encode(row))
                    handle.write("\n")
                    count += 1
        except OSError as e:
            raise RepositoryError(
                f"Cannot write atlas rows: {e}",
                repository="jsonlines",
                operation=f"write {path}"
            )
        logger.info("Wrote %d atlas rows to %s", count, target)
        return count

    def read_rows(self, path: str) -> List[AtlasRow]:
        """
        Read rows in file order; blank lines are ignored

        Raises:
            RepositoryError: If the file cannot be read or a line is malformed
        """
        rows: List[AtlasRow] = []
        try:
            with open(path, "r", encoding="utf-8") as handle:
                for number, line in enumerate(handle, 1):
                    if not line.strip():
                        continue
                    try:
                        rows.append(AtlasRow.from_dict(json.loads(line)))
                    except (json.JSONDecodeError, ValidationError) as e:
                        raise RepositoryError(
                            f"Malformed row on line {number}: {e}",
                            repository="jsonlines",
                            operation=f"read {path}"
                        )
        except OSError as e:
            raise RepositoryError(
                f"Cannot read atlas rows: {e}",
                repository="jsonlines",
                operation=f"read {path}"
            )
        return rows
