"""
JSON Exporter - Writes command reports as JSON lines or readable text
"""
import json
import logging
from typing import Any, Dict, List, TextIO

from config import OUTPUT_SIGNIFICANT_DIGITS, SCHEMA_VERSION

logger = logging.getLogger(__name__)


def round_significant(x: float, digits: int = OUTPUT_SIGNIFICANT_DIGITS) -> float:
    return float(f"{x:.{digits}g}")


def _is_complex_pair(value: Any) -> bool:
    return (isinstance(value, list) and len(value) == 2
            and all(isinstance(x, float) for x in value))


class JsonExporter:
    """Export command reports in the selected output format"""

    def __init__(self, output_format: str = "json", digits: int = OUTPUT_SIGNIFICANT_DIGITS):
        self.output_format = output_format
        self.digits = digits

    def export(self, data: Dict[str, Any], stream: TextIO) -> Dict[str, Any]:
        """
        Write one report.

        Args:
            data: Report dictionary (gets a "schema" field if missing)
            stream: Output stream

        Returns:
            The dictionary actually written, after rounding
        """
        payload = {"schema": SCHEMA_VERSION, **data}
        payload = self.round_numbers(payload)

        check = self.validate_structure(payload)
        for warning in check['warnings']:
            logger.warning(warning)
        if not check['valid']:
            raise ValueError("; ".join(check['errors']))

        if self.output_format == "json":
            stream.write(json.dumps(payload, ensure_ascii=False, allow_nan=False) + "\n")
        else:
            stream.write(self.render_text(payload))
        stream.flush()
        return payload

    def round_numbers(self, value: Any) -> Any:
        """Round every float to the output precision, recursively"""
        if isinstance(value, bool) or value is None:
            return value
        if isinstance(value, float):
            return round_significant(value, self.digits)
        if isinstance(value, dict):
            return {k: self.round_numbers(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self.round_numbers(v) for v in value]
        return value

    def render_text(self, payload: Dict[str, Any]) -> str:
        lines: List[str] = []
        self._flatten("", payload, lines)
        return "\n".join(lines) + "\n"

    def _flatten(self, prefix: str, value: Any, lines: List[str]):
        if _is_complex_pair(value):
            lines.append(f"{prefix}: {self.format_complex(complex(value[0], value[1]))}")
        elif isinstance(value, dict):
            for key, item in value.items():
                self._flatten(f"{prefix}.{key}" if prefix else str(key), item, lines)
        elif isinstance(value, list) and value and all(isinstance(v, (dict, list)) for v in value):
            for i, item in enumerate(value):
                self._flatten(f"{prefix}[{i}]", item, lines)
        elif isinstance(value, float):
            lines.append(f"{prefix}: {value:.{self.digits}g}")
        elif isinstance(value, list):
            lines.append(f"{prefix}: {' '.join(str(v) for v in value)}")
        else:
            lines.append(f"{prefix}: {value}")

    def format_complex(self, z: complex) -> str:
        return f"{z.real:.{self.digits}g}{z.imag:+.{self.digits}g}j"

    def validate_structure(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Check the fields every report must carry.

        Returns:
            Dictionary with validation results
        """
        errors = []
        warnings = []

        if data.get('schema') != SCHEMA_VERSION:
            errors.append(f"schema must be {SCHEMA_VERSION}")
        if not data.get('command'):
            errors.append("Missing required field: command")

        if 'error' not in data and data.get('command') in ('gen', 'solve', 'recover', 'check'):
            for field in ('tolerance', 'free_parameter'):
                if field not in data:
                    warnings.append(f"Report without {field}")

        return {
            'valid': len(errors) == 0,
            'errors': errors,
            'warnings': warnings
        }
