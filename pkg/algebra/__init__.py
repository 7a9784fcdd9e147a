"""
Algebra Package - الجبر الثنائي
"""
from .boolean_ring import (
    Evaluation, Monomial, Polynomial, evaluate, mono_divide, mono_gcd,
    monomial_of_row, poly_add, poly_mul, row_index_of
)
from .monomial_order import (
    decreasing_closure, divides_order, is_decreasing, preceq, shift_order
)

__all__ = [
    'Monomial', 'Polynomial', 'Evaluation',
    'evaluate', 'mono_gcd', 'mono_divide', 'row_index_of', 'monomial_of_row',
    'poly_add', 'poly_mul',
    'divides_order', 'shift_order', 'preceq', 'is_decreasing', 'decreasing_closure'
]
