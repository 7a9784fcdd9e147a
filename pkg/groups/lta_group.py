"""
LTA Group - زمرة التحويلات التآلفية المثلثية السفلية
The lower-triangular affine group LTA(m,2), the parameterized subgroups
LTA(m,2)_g acting on a monomial g, and the orbits they generate.

An element (B, eps) substitutes every x_i by
    y_i = x_i + sum_{j<i} b_{i,j} x_j + eps_i.
LTA(m,2)_g keeps eps_i free only for i in ind(g), and b_{i,j} free only for
i in ind(g), j not in ind(g); every other off-diagonal entry is zero.
"""

from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterator, Optional, Set, Tuple

import numpy as np

from algebra.boolean_ring import Monomial, Polynomial, linear_form
from config.settings import get_config
from models.base import BaseModel
from utils.validation_helpers import IndexOutOfRange, NonDivisor, TooLarge


@dataclass(frozen=True)
class GroupElement(BaseModel):
    """(B, eps) with B unit lower triangular; only the set entries below the diagonal are stored"""

    m: int
    lower: FrozenSet[Tuple[int, int]] = frozenset()
    eps: int = 0

    def __post_init__(self):
        for i, j in self.lower:
            if not 0 <= j < i < self.m:
                raise IndexOutOfRange(f'b_{{{i},{j}}} is not strictly below the diagonal', field='lower')
        if self.eps >> self.m:
            raise IndexOutOfRange('eps has bits outside [0, m)', field='eps')

    @classmethod
    def identity(cls, m: int) -> 'GroupElement':
        return cls(m=m)

    @classmethod
    def from_matrix(cls, B: np.ndarray, eps) -> 'GroupElement':
        """Build from a dense m x m bit matrix with unit diagonal and a length-m eps vector"""
        B = np.asarray(B, dtype=np.uint8) & 1
        m = B.shape[0]
        if B.shape != (m, m) or not np.all(np.diag(B) == 1) or np.any(np.triu(B, k=1)):
            raise IndexOutOfRange('B must be lower triangular with unit diagonal', field='B')
        lower = frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(np.tril(B, k=-1))))
        eps_mask = sum(1 << i for i, bit in enumerate(np.asarray(eps, dtype=np.uint8)) if bit & 1)
        return cls(m=m, lower=lower, eps=eps_mask)

    def matrix(self) -> np.ndarray:
        B = np.eye(self.m, dtype=np.uint8)
        for i, j in self.lower:
            B[i, j] = 1
        return B

    def epsilon(self) -> np.ndarray:
        return np.array([self.eps >> i & 1 for i in range(self.m)], dtype=np.uint8)

    def substitution(self, i: int) -> Polynomial:
        """y_i"""
        lower = [j for (row, j) in self.lower if row == i]
        return linear_form(i, lower, bool(self.eps >> i & 1))

    def apply(self, f: Monomial) -> Polynomial:
        return apply(self, f)


@dataclass(frozen=True)
class SubgroupMask(BaseModel):
    """Free positions of LTA(m,2)_g, optionally restricted to the rows of a divisor of g"""

    base: Monomial
    m: int
    b_positions: Tuple[Tuple[int, int], ...]
    eps_positions: Tuple[int, ...]

    @property
    def free_count(self) -> int:
        return len(self.b_positions) + len(self.eps_positions)

    @property
    def order(self) -> int:
        return 1 << self.free_count

    def element(self, index: int) -> GroupElement:
        """Element number index; free bits read MSB first in (B row-major, then eps) order"""
        n = self.free_count
        bits = [(index >> (n - 1 - k)) & 1 for k in range(n)]
        nb = len(self.b_positions)
        lower = frozenset(pos for pos, bit in zip(self.b_positions, bits[:nb]) if bit)
        eps = sum(1 << i for i, bit in zip(self.eps_positions, bits[nb:]) if bit)
        return GroupElement(m=self.m, lower=lower, eps=eps)

    def elements(self) -> Iterator[GroupElement]:
        for index in range(self.order):
            yield self.element(index)


def lambda_single(f: Monomial, i: int) -> int:
    """lambda_f(i): indices j < i that are not in ind(f)"""
    return i - (f.mask & ((1 << i) - 1)).bit_count()


def lambda_total(f: Monomial, g: Monomial) -> int:
    """|lambda_f(g)| = sum of lambda_f(i) over i in ind(g)"""
    return sum(lambda_single(f, i) for i in g.vars)


def orbit_exponent_breakdown(base: Monomial, target: Monomial = None) -> Tuple[int, Tuple[int, ...]]:
    """(deg(target), lambda_base(i) for i in ind(target)) so that the orbit size is 2^(deg + sum)"""
    target = base if target is None else target
    return target.degree, tuple(lambda_single(base, i) for i in target.vars)


def orbit_cardinality(f: Monomial, target: Monomial = None) -> int:
    """|LTA(m,2)_f . target| = 2^(deg(target) + |lambda_f(target)|); target defaults to f"""
    target = f if target is None else target
    return 1 << (target.degree + lambda_total(f, target))


def _default_m(f: Monomial, m: Optional[int]) -> int:
    if m is None:
        return max(f.mask.bit_length(), 1)
    if not f.fits(m):
        raise IndexOutOfRange(f'{f} uses a variable outside [0, {m})', field='vars', details={'m': m})
    return m


def subgroup_mask(g: Monomial, m: int = None, rows: Monomial = None) -> SubgroupMask:
    """
    Free positions of LTA(m,2)_g

    Args:
        g: Monomial defining the subgroup
        m: Number of variables
        rows: Divisor of g; only rows i in ind(rows) are kept free, which is all an
            action on that divisor can see

    Returns:
        SubgroupMask
    """
    m = _default_m(g, m)
    rows = g if rows is None else rows
    if not rows.divides(g):
        raise NonDivisor(f'{rows} does not divide {g}', details={'g': list(g.vars), 'rows': list(rows.vars)})
    b_positions = tuple(
        (i, j) for i in rows.vars for j in range(i) if not g.mask >> j & 1
    )
    return SubgroupMask(base=g, m=m, b_positions=b_positions, eps_positions=rows.vars)


def subgroup_elements(g: Monomial, m: int = None) -> Iterator[GroupElement]:
    """Every element of LTA(m,2)_g, 2^(deg(g) + |lambda_g|) of them"""
    return subgroup_mask(g, m).elements()


def apply(e: GroupElement, f: Monomial) -> Polynomial:
    """Reduced ANF of the product of y_i over i in ind(f)"""
    if not f.fits(e.m):
        raise IndexOutOfRange(f'{f} uses a variable outside [0, {e.m})', field='vars')
    result = Polynomial.one()
    for i in f.vars:
        result = result * e.substitution(i)
    return result


def iter_orbit(base: Monomial, target: Monomial = None, m: int = None) -> Iterator[Polynomial]:
    """Images of target under LTA(m,2)_base, before deduplication"""
    target = base if target is None else target
    mask = subgroup_mask(base, m, rows=target)
    for e in mask.elements():
        yield apply(e, target)


def orbit(base: Monomial, target: Monomial = None, m: int = None) -> Set[Polynomial]:
    """
    LTA(m,2)_base . target

    With target = base this is the full orbit LTA(m,2) . base; with target = base/h
    it is the restricted action used for pairs of max-degree monomials.
    """
    return set(iter_orbit(base, target, m))


def _full_group_positions(m: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, j) for i in range(m) for j in range(i))


def full_group_elements(m: int) -> Iterator[GroupElement]:
    """Exhaustive LTA(m,2); 2^(m(m-1)/2 + m) elements"""
    limit = get_config().FULL_GROUP_MAX_M
    if m > limit:
        raise TooLarge(f'Exhaustive LTA({m},2) is limited to m <= {limit}', details={'m': m})
    positions = _full_group_positions(m)
    for b_bits in product((0, 1), repeat=len(positions)):
        lower = frozenset(pos for pos, bit in zip(positions, b_bits) if bit)
        for eps in range(1 << m):
            yield GroupElement(m=m, lower=lower, eps=eps)


def full_group_orbit(f: Monomial, m: int) -> Set[Polynomial]:
    return {apply(e, f) for e in full_group_elements(m)}


def random_element(m: int, rng: np.random.Generator) -> GroupElement:
    """Uniform element of LTA(m,2)"""
    positions = _full_group_positions(m)
    b_bits = rng.integers(0, 2, size=len(positions))
    eps_bits = rng.integers(0, 2, size=m)
    lower = frozenset(pos for pos, bit in zip(positions, b_bits) if bit)
    eps = sum(1 << i for i, bit in enumerate(eps_bits) if bit)
    return GroupElement(m=m, lower=lower, eps=eps)
