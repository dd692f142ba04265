"""
Excel Report Formatter
Implements IReportFormatter for Excel format
"""

import base64
import io
from typing import Dict, Any

import pandas as pd

from application.interfaces.services import IReportFormatter


# Excel limits sheet names to 31 characters
_MAX_SHEET_NAME = 31


class ExcelReportFormatter(IReportFormatter):
    """
    Excel Report Formatter (Strategy Pattern)

    One sheet per table plus an optional metadata sheet.
    """

    def __init__(self, engine: str = 'openpyxl', include_metadata: bool = True):
        """
        Initialize Excel formatter

        Args:
            engine: Excel writer engine ('openpyxl' or 'xlsxwriter')
            include_metadata: Whether to include metadata sheet
        """
        self._engine = engine
        self._include_metadata = include_metadata

    def format(self, data: Dict[str, Any]) -> str:
        """
        Format data as Excel (returns base64-encoded bytes)

        Args:
            data: Report data containing 'tables' and 'metadata'

        Returns:
            Excel file content as base64-encoded string
        """
        output = io.BytesIO()
        self._write(data, output)
        return base64.b64encode(output.getvalue()).decode('utf-8')

    def get_extension(self) -> str:
        """Get file extension"""
        return 'xlsx'

    def _write(self, data: Dict[str, Any], target: Any) -> None:
        tables = data.get('tables', {})
        metadata = data.get('metadata', {})

        with pd.ExcelWriter(target, engine=self._engine) as writer:
            written = 0
            for name, rows in tables.items():
                if not rows:
                    continue
                sheet = name.replace('_', ' ').title()[:_MAX_SHEET_NAME]
                pd.DataFrame(rows).to_excel(writer, sheet_name=sheet, index=False)
                written += 1

            if (self._include_metadata and metadata) or not written:
                metadata_rows = [{'Key': k, 'Value': str(v)} for k, v in metadata.items()]
                pd.DataFrame(metadata_rows, columns=['Key', 'Value']).to_excel(
                    writer, sheet_name='Metadata', index=False
                )
