"""
JSON Report Formatter
Tables, metadata and per-table row counts in one document
"""

import json
from typing import Dict, Any

from application.interfaces.services import IReportFormatter


class JSONReportFormatter(IReportFormatter):
    """JSON Report Formatter (Strategy Pattern)"""

    def __init__(self, indent: int = 2, ensure_ascii: bool = False):
        self._indent = indent
        self._ensure_ascii = ensure_ascii

    def format(self, data: Dict[str, Any]) -> str:
        """
        Serialize a report

        Values that JSON cannot encode (paths, enums) are written with str().
        """
        tables = data.get('tables', {})
        document = {
            'metadata': data.get('metadata', {}),
            'tables': tables,
            'summary': {name: len(rows) for name, rows in tables.items()},
        }
        return json.dumps(document, indent=self._indent, ensure_ascii=self._ensure_ascii, default=str)

    def get_extension(self) -> str:
        return 'json'
