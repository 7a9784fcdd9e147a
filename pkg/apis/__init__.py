# apis/__init__.py
"""
APIs Package - مجموعة الـ APIs
"""
from .enumeration_api import codes_bp
from .health_api import health_bp

__all__ = ['codes_bp', 'health_bp']
