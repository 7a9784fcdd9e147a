# utils/__init__.py
"""
Utilities Package - مجموعة الأدوات المساعدة
"""
from .logging_helpers import get_logger, setup_logging
from .response_helpers import domain_error_response, error_response, success_response
from .validation_helpers import ValidationError

__all__ = [
    'get_logger', 'setup_logging',
    'success_response', 'error_response', 'domain_error_response',
    'ValidationError'
]
