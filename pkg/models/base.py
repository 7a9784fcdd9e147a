"""
Base Model Class
الفئة الأساسية لجميع النماذج
"""

from dataclasses import fields, is_dataclass
from typing import Any, Dict


def _plain(value: Any) -> Any:
    # Monomials render as their sorted variable list
    if hasattr(value, 'vars') and hasattr(value, 'mask'):
        return list(value.vars)
    if is_dataclass(value) and hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_plain(v) for v in items]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


class BaseModel:
    """Base class for immutable value objects"""

    def to_dict(self) -> Dict[str, Any]:
        """Convert model to dictionary"""
        return {f.name: _plain(getattr(self, f.name)) for f in fields(self)}
