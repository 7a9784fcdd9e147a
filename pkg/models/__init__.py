"""
Models Package Initialization
نماذج الشيفرات والتقارير
"""

from .base import BaseModel
from .code_model import (
    CodeSpec, MonomialPair, from_monomials, from_row_indices, generator_rows,
    max_degree_pairs, reed_muller, to_row_indices
)
from .reports import (
    CensusResult, CheckResult, CosetRecord, PairRecord, SampleCheckReport, Spectrum,
    WeightReport
)

__all__ = [
    # Base
    'BaseModel',

    # Codes
    'CodeSpec', 'MonomialPair',
    'from_row_indices', 'from_monomials', 'reed_muller', 'to_row_indices',
    'max_degree_pairs', 'generator_rows',

    # Reports
    'PairRecord', 'WeightReport', 'CosetRecord', 'Spectrum', 'CensusResult', 'CheckResult',
    'SampleCheckReport'
]
