"""
Input Validator
Validates user input for the CLI
"""

from typing import List, Tuple

from domain.exceptions.atlas_errors import ValidationError
from domain.value_objects.knot_type import KnotType
from domain.value_objects.regions import LRegion, Rect


class InputValidator:
    """
    Input Validator

    Parses command-line strings into domain values.
    Every failure is a ValidationError naming the offending field.
    """

    @staticmethod
    def parse_int_list(text: str, field: str) -> List[int]:
        """
        Parse a comma-separated integer list

        Raises:
            ValidationError: If any item is not an integer
        """
        items = [item.strip() for item in (text or "").split(",") if item.strip()]
        if not items:
            raise ValidationError(f"{field} is required", field=field, constraint="non-empty")
        try:
            return [int(item) for item in items]
        except ValueError:
            raise ValidationError(
                f"Invalid integer list: {text}",
                field=field,
                value=text,
                constraint="comma-separated integers"
            )

    @classmethod
    def parse_epsilons(cls, text: str) -> List[int]:
        values = cls.parse_int_list(text, "eps")
        if any(v not in (1, -1) for v in values):
            raise ValidationError(
                f"Invalid epsilon list: {text}",
                field="eps",
                value=text,
                constraint="each of -1, 1"
            )
        return sorted(set(values))

    @staticmethod
    def parse_types(text: str) -> List[KnotType]:
        tags = [tag for tag in (text or "").split(",") if tag.strip()]
        if not tags:
            raise ValidationError("At least one knot type is required", field="types")
        types: List[KnotType] = []
        for tag in tags:
            knot_type = KnotType.from_string(tag)
            if knot_type not in types:
                types.append(knot_type)
        return types

    @staticmethod
    def parse_region(text: str) -> LRegion:
        return LRegion.parse(text)

    @classmethod
    def parse_rect(cls, text: str) -> Rect:
        values = cls.parse_int_list(text, "rect")
        if len(values) != 2:
            raise ValidationError(
                "Rectangle must be two integers a,b",
                field="rect",
                value=text
            )
        return Rect(*values)

    @staticmethod
    def validate_epsilon(value: int) -> int:
        if value not in (1, -1):
            raise ValidationError(
                f"Invalid epsilon: {value}",
                field="eps",
                value=value,
                constraint="-1 or 1"
            )
        return value

    @staticmethod
    def validate_report_formats(formats: List[str]) -> List[str]:
        """
        Validate report format selections

        Args:
            formats: List of format strings

        Returns:
            Validated format list, "xlsx" normalized to "excel"

        Raises:
            ValidationError: If any format is invalid
        """
        if not formats:
            raise ValidationError(
                "At least one report format must be selected",
                field="formats",
                constraint="non-empty"
            )

        valid_formats = ('csv', 'excel', 'xlsx', 'json')
        validated: List[str] = []

        for fmt in formats:
            fmt_lower = fmt.lower().strip()
            if fmt_lower not in valid_formats:
                raise ValidationError(
                    f"Invalid report format: {fmt}",
                    field="formats",
                    value=fmt,
                    constraint=f"must be one of: {', '.join(valid_formats)}"
                )
            if fmt_lower == 'xlsx':
                fmt_lower = 'excel'
            if fmt_lower not in validated:
                validated.append(fmt_lower)

        return validated

    @staticmethod
    def parse_formats(text: str) -> List[str]:
        return InputValidator.validate_report_formats(
            [item for item in (text or "").split(",") if item.strip()]
        )

    @staticmethod
    def validate_positive(value: int, field: str) -> int:
        if value < 1:
            raise ValidationError(f"{field} must be positive", field=field, value=value, constraint=">= 1")
        return value

    @staticmethod
    def validate_ttk(p: int, q: int, r: int, s: int) -> Tuple[int, int, int, int]:
        for name, value in (("p", p), ("q", q), ("r", r), ("s", s)):
            InputValidator.validate_positive(value, name)
        return p, q, r, s
