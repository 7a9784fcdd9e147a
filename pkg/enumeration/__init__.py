"""
Enumeration Package - العد المغلق والتحقق الشامل
"""
from .weight_enumerator import (
    core_row_set, coset_pairs, count_1p5, count_min_weight, count_pair_coset,
    pairs_table, union_bound, weight_enum
)
from .oracle import (
    brute_force_codewords, brute_force_spectrum, gf2_rank, min_weight_set,
    one_five_census, verify_code
)

__all__ = [
    'count_min_weight', 'count_1p5', 'core_row_set', 'count_pair_coset', 'coset_pairs',
    'union_bound', 'weight_enum', 'pairs_table',
    'brute_force_spectrum', 'brute_force_codewords', 'gf2_rank', 'min_weight_set',
    'one_five_census', 'verify_code'
]
