"""
Groups Package - الزمر والمدارات
"""
from .lta_group import (
    GroupElement, SubgroupMask, apply, full_group_elements, iter_orbit,
    lambda_single, lambda_total, orbit, orbit_cardinality, random_element,
    subgroup_elements
)
from .minkowski_sums import (
    DegreeTwoPair, collision_classes, collision_degree, lemma2_sample_check,
    minkowski_cardinality, minkowski_sum_set, pair_set
)

__all__ = [
    'GroupElement', 'SubgroupMask', 'apply', 'full_group_elements', 'iter_orbit',
    'lambda_single', 'lambda_total', 'orbit', 'orbit_cardinality', 'random_element',
    'subgroup_elements',
    'DegreeTwoPair', 'collision_classes', 'collision_degree', 'lemma2_sample_check',
    'minkowski_cardinality', 'minkowski_sum_set', 'pair_set'
]
