"""
CSV Report Formatter
"""

import csv
import io
from typing import Dict, Any, List

from application.interfaces.services import IReportFormatter


class CSVReportFormatter(IReportFormatter):
    """
    CSV Report Formatter (Strategy Pattern)

    CSV has no sheets: the first non-empty table is written plain, each
    later one after a blank line and a "# <name>" heading.
    """

    def __init__(self, delimiter: str = ',', include_header: bool = True):
        self._delimiter = delimiter
        self._include_header = include_header

    def format(self, data: Dict[str, Any]) -> str:
        output = io.StringIO()
        tables = [(name, rows) for name, rows in data.get('tables', {}).items() if rows]
        for position, (name, rows) in enumerate(tables):
            if position:
                output.write(f"\n# {name}\n")
            self._write_table(output, rows)
        return output.getvalue()

    def get_extension(self) -> str:
        return 'csv'

    def _write_table(self, output: io.StringIO, rows: List[Dict[str, Any]]) -> None:
        # columns in first-seen order across rows
        columns: List[str] = []
        for row in rows:
            columns.extend(key for key in row if key not in columns)

        writer = csv.DictWriter(output, fieldnames=columns, delimiter=self._delimiter, lineterminator='\n')
        if self._include_header:
            writer.writeheader()
        writer.writerows(rows)
