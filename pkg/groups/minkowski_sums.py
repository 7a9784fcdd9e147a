"""
Minkowski Sums - مجاميع مينكوفسكي للمدارات
Collision degree of two coprime degree-2 monomials, Minkowski sums of orbits,
and the pair-set h-orbit times (f/h-orbit + g/h-orbit) whose members are the
1.5 w_min codewords attached to one pair of max-degree monomials.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Set

import numpy as np

from algebra.boolean_ring import Monomial, Polynomial, mono_divide, mono_gcd
from config.settings import get_config
from groups.lta_group import apply, orbit, orbit_cardinality, random_element
from models.base import BaseModel
from models.reports import SampleCheckReport
from utils.logging_helpers import get_logger
from utils.validation_helpers import BadPair, NotCoprime, NotDegreeTwo

logger = get_logger(__name__)


@dataclass(frozen=True)
class DegreeTwoPair(BaseModel):
    """Coprime degree-2 monomials, fpart holding the largest variable of the two"""

    fpart: Monomial
    gpart: Monomial

    @classmethod
    def canonical(cls, f: Monomial, g: Monomial) -> 'DegreeTwoPair':
        for name, part in (('f', f), ('g', g)):
            if part.degree != 2:
                raise NotDegreeTwo(
                    f'{part} has degree {part.degree}, expected 2',
                    field=name, details={'vars': list(part.vars)}
                )
        if f.mask & g.mask:
            raise NotCoprime(f'{f} and {g} share a variable', details={'f': list(f.vars), 'g': list(g.vars)})
        if g.vars[1] > f.vars[1]:
            f, g = g, f
        return cls(fpart=f, gpart=g)

    @property
    def indices(self):
        """(i1, i2, j1, j2)"""
        (i1, i2), (j1, j2) = self.fpart.vars, self.gpart.vars
        return i1, i2, j1, j2


def collision_degree(p: DegreeTwoPair) -> int:
    """
    alpha: 0 for i2>i1>j2>j1, 1 for i2>j2>i1>j1, 2 for i2>j2>j1>i1

    These three interleavings are the only ones possible once i2 > j2.
    """
    i1, _, j1, j2 = p.indices
    if i1 > j2:
        return 0
    if i1 > j1:
        return 1
    return 2


def collision_pattern(p: DegreeTwoPair) -> str:
    """Interleaving of the four indices, largest first, e.g. 'i2>j2>i1>j1'"""
    i1, i2, j1, j2 = p.indices
    labelled = sorted(((i1, 'i1'), (i2, 'i2'), (j1, 'j1'), (j2, 'j2')), reverse=True)
    return '>'.join(label for _, label in labelled)


def minkowski_cardinality(f: Monomial, g: Monomial) -> int:
    """|LTA.f + LTA.g| = |LTA.f| * |LTA.g| / 2^alpha"""
    p = DegreeTwoPair.canonical(f, g)
    return (orbit_cardinality(p.fpart) * orbit_cardinality(p.gpart)) >> collision_degree(p)


def minkowski_sum_set(A: Iterable[Polynomial], B: Iterable[Polynomial]) -> Set[Polynomial]:
    B = list(B)
    return {P + Q for P in A for Q in B}


def minkowski_product_set(A: Iterable[Polynomial], B: Iterable[Polynomial]) -> Set[Polynomial]:
    B = list(B)
    return {P * Q for P in A for Q in B}


def _pair_parts(f: Monomial, g: Monomial):
    if f.degree != g.degree:
        raise BadPair(
            f'{f} and {g} have different degrees',
            details={'f': list(f.vars), 'g': list(g.vars)}
        )
    h = mono_gcd(f, g)
    if f.degree < 2 or h.degree != f.degree - 2:
        raise BadPair(
            f'gcd({f}, {g}) = {h} must have degree {f.degree - 2}',
            details={'f': list(f.vars), 'g': list(g.vars), 'h': list(h.vars)}
        )
    return h, mono_divide(f, h), mono_divide(g, h)


def pair_set(f: Monomial, g: Monomial, m: int) -> Set[Polynomial]:
    """
    LTA_h.h * (LTA_f.(f/h) + LTA_g.(g/h)) with h = gcd(f, g)

    Args:
        f: Max-degree monomial
        g: Max-degree monomial of the same degree r
        m: Number of variables

    Returns:
        Every polynomial of the set; each evaluates to weight 3 * 2^(m-r-1)

    Raises:
        BadPair: when deg f != deg g or deg gcd(f, g) != r - 2
    """
    h, f_part, g_part = _pair_parts(f, g)
    sums = minkowski_sum_set(orbit(f, f_part, m), orbit(g, g_part, m))
    result = minkowski_product_set(orbit(h, h, m), sums)
    logger.debug('pair_set_built', f=str(f), g=str(g), sums=len(sums), size=len(result))
    return result


def collision_classes(f2: Monomial, g2: Monomial, m: int) -> Dict[int, int]:
    """
    Group orbit(f2) x orbit(g2) by the value of P + Q

    Returns:
        Histogram class size -> number of classes; a single key 2^alpha is expected
    """
    DegreeTwoPair.canonical(f2, g2)
    orbit_g = list(orbit(g2, g2, m))
    classes = Counter(P + Q for P in orbit(f2, f2, m) for Q in orbit_g)
    return dict(Counter(classes.values()))


def lemma2_sample_check(f: Monomial, g: Monomial, m: int, trials: int = None, seed: int = None) -> SampleCheckReport:
    """
    Membership of full-group products in the subgroup pair-set

    Each trial draws three independent elements of LTA(m,2), builds
    e1(h) * (e2(f/h) + e3(g/h)) and checks it lies in pair_set(f, g, m).
    trials and seed default to LEMMA2_TRIALS and RANDOM_SEED of the active config.
    """
    config = get_config()
    trials = config.LEMMA2_TRIALS if trials is None else trials
    seed = config.RANDOM_SEED if seed is None else seed
    h, f_part, g_part = _pair_parts(f, g)
    members = pair_set(f, g, m)
    rng = np.random.default_rng(seed)
    failures = []
    for _ in range(trials):
        e1, e2, e3 = (random_element(m, rng) for _ in range(3))
        P = apply(e1, h) * (apply(e2, f_part) + apply(e3, g_part))
        if P not in members:
            failures.append(str(P))
    if failures:
        logger.warning('sampled_product_outside_pair_set', f=str(f), g=str(g), failures=len(failures))
    return SampleCheckReport(trials=trials, failures=tuple(failures))
