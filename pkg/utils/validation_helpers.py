"""
🔍 Validation Helpers - نظام التحقق الشامل
Error hierarchy and input parsing shared by the library, the CLI and the HTTP layer
"""

import re
from typing import Any, Dict, List, Optional, Tuple

import numpy as np


class ValidationError(Exception):
    """Custom validation exception"""

    code = 'VALIDATION_ERROR'
    exit_code = 1

    def __init__(self, message: str, field: str = None, details: Dict = None):
        self.message = message
        self.field = field
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Error record in the shape used by error_response"""
        error = {'code': self.code, 'message': self.message}
        if self.field:
            error['field'] = self.field
        if self.details:
            error['details'] = self.details
        return error


class NonDivisor(ValidationError):
    """Raised when a monomial does not divide another"""
    code = 'NON_DIVISOR'


class IndexOutOfRange(ValidationError):
    """Raised for row or variable indices outside the ambient space"""
    code = 'INDEX_OUT_OF_RANGE'


class NotDecreasing(ValidationError):
    """Raised when a monomial set is not closed downward; details hold the witness"""
    code = 'NOT_DECREASING'
    exit_code = 2


class UnsupportedCode(ValidationError):
    """Raised when a code falls outside an operation's preconditions"""
    code = 'UNSUPPORTED_CODE'
    exit_code = 2


class BadPair(ValidationError):
    code = 'BAD_PAIR'


class NotCoprime(ValidationError):
    code = 'NOT_COPRIME'


class NotDegreeTwo(ValidationError):
    code = 'NOT_DEGREE_TWO'


class RowNotMaxDegree(ValidationError):
    code = 'ROW_NOT_MAX_DEGREE'


class TooLarge(ValidationError):
    """Raised when an exhaustive computation exceeds a configured cap"""
    code = 'TOO_LARGE'


class VerificationMismatch(ValidationError):
    """A formula disagrees with the brute-force oracle"""
    code = 'VERIFICATION_MISMATCH'
    exit_code = 3


# A-file: decimal row indices separated by whitespace or commas, '#' starts a comment
_COMMENT_PATTERN = re.compile(r'#.*$', re.MULTILINE)
_TOKEN_PATTERN = re.compile(r'[\s,]+')


def parse_row_indices(text: str) -> List[int]:
    """
    Parse the contents of an A-file

    Args:
        text: File contents

    Returns:
        Row indices in file order
    """
    cleaned = _COMMENT_PATTERN.sub('', text)
    rows = []
    for token in _TOKEN_PATTERN.split(cleaned):
        if not token:
            continue
        if not token.isdigit():
            raise ValidationError(f"Invalid row index '{token}'", field='rows')
        rows.append(int(token))
    if not rows:
        raise ValidationError('No row indices found', field='rows')
    return rows


def parse_variables(text: str) -> List[int]:
    """Parse a comma separated variable list; the empty string is the constant monomial"""
    text = (text or '').strip()
    if not text:
        return []
    variables = []
    for token in text.split(','):
        token = token.strip().lstrip('x')
        if not token.isdigit():
            raise ValidationError(f"Invalid variable index '{token}'", field='vars')
        variables.append(int(token))
    if len(set(variables)) != len(variables):
        raise ValidationError('Repeated variable index', field='vars', details={'vars': variables})
    return variables


def parse_ebn0_range(text: str) -> List[float]:
    """
    Parse an Eb/N0 grid

    Args:
        text: 'start:stop:step' (stop inclusive) or a comma separated list in dB

    Returns:
        Grid points in dB
    """
    text = text.strip()
    if ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise ValidationError('Expected start:stop:step', field='ebn0')
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError:
            raise ValidationError(f"Invalid Eb/N0 range '{text}'", field='ebn0')
        if step <= 0 or stop < start:
            raise ValidationError('Eb/N0 range must be increasing with a positive step', field='ebn0')
        return [float(v) for v in np.arange(start, stop + step / 2, step)]
    try:
        return [float(p) for p in text.split(',') if p.strip()]
    except ValueError:
        raise ValidationError(f"Invalid Eb/N0 list '{text}'", field='ebn0')


def validate_int(value: Any, field: str) -> int:
    """Integer field of a request body; digit strings are accepted, fractions and booleans are not"""
    if isinstance(value, bool):
        raise ValidationError(f"Invalid integer '{value}'", field=field)
    try:
        result = int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"Invalid integer '{value}'", field=field)
    if isinstance(value, float) and value != result:
        raise ValidationError(f"Invalid integer '{value}'", field=field)
    return result


def validate_float(value: Any, field: str) -> float:
    if isinstance(value, bool):
        raise ValidationError(f"Invalid number '{value}'", field=field)
    try:
        result = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"Invalid number '{value}'", field=field)
    if not np.isfinite(result):
        raise ValidationError(f"Invalid number '{value}'", field=field)
    return result


def validate_m(m: Any, max_m: int) -> int:
    """Validate the number of variables"""
    value = validate_int(m, 'm')
    if not 1 <= value <= max_m:
        raise IndexOutOfRange(f'm must be between 1 and {max_m}', field='m', details={'m': value})
    return value


def validate_rate(rate: Any) -> float:
    """Validate a code rate for the union bound"""
    rate = validate_float(rate, 'rate')
    if not 0 < rate <= 1:
        raise ValidationError('Rate must satisfy 0 < R <= 1', field='rate', details={'rate': rate})
    return rate


def validate_code_source(data: Dict[str, Any]) -> Tuple[Optional[List[int]], Optional[int], Optional[Tuple[int, int]]]:
    """
    Validate a request body describing a code

    Args:
        data: Either {'rows': [...], 'm': m} or {'rm': [r, m]}

    Returns:
        Tuple of (rows, m, rm)
    """
    if not data:
        raise ValidationError('Request body is required')
    if 'rm' in data:
        rm = data['rm']
        if not isinstance(rm, (list, tuple)) or len(rm) != 2:
            raise ValidationError('rm must be [r, m]', field='rm')
        return None, None, (validate_int(rm[0], 'rm'), validate_int(rm[1], 'rm'))
    missing = [name for name in ('rows', 'm') if name not in data]
    if missing:
        raise ValidationError('Missing required fields', details={'missing_fields': missing})
    rows = data['rows']
    if not isinstance(rows, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in rows):
        raise ValidationError('rows must be a list of integers', field='rows')
    return rows, validate_int(data['m'], 'm'), None
