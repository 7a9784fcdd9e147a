"""
CODE Model - نموذج الشيفرة
Decreasing monomial codes: construction from row indices, monomials or
Reed-Muller parameters, and the derived quantities r, I_r, A_{m-r}, w_min.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Tuple

from algebra.boolean_ring import (
    Evaluation, Monomial, evaluate, mono_gcd, monomial_of_row, row_index_of
)
from algebra.monomial_order import check_decreasing, decreasing_closure
from config.settings import get_config
from models.base import BaseModel
from utils.logging_helpers import get_logger
from utils.validation_helpers import IndexOutOfRange, ValidationError, validate_m

logger = get_logger(__name__)


class MonomialPair(NamedTuple):
    """Two max-degree monomials sharing a degree r-2 factor, f the one with the larger row"""
    f: Monomial
    g: Monomial
    h: Monomial


@dataclass(frozen=True)
class CodeSpec(BaseModel):
    """Decreasing monomial code C(I) in m variables"""

    m: int
    monomials: FrozenSet[Monomial]
    closure_additions: Tuple[int, ...] = ()

    def __post_init__(self):
        if not self.monomials:
            raise ValidationError('A code needs at least one monomial', field='monomials')
        check_decreasing(self.monomials, self.m)

    @property
    def N(self) -> int:
        return 1 << self.m

    @property
    def K(self) -> int:
        return len(self.monomials)

    @cached_property
    def r(self) -> int:
        return max(f.degree for f in self.monomials)

    @property
    def w_min(self) -> int:
        return 1 << (self.m - self.r)

    @property
    def rate(self) -> float:
        return self.K / self.N

    def row_of(self, f: Monomial) -> int:
        return row_index_of(f, self.m)

    @cached_property
    def strata(self) -> Dict[int, Tuple[Monomial, ...]]:
        """Degree -> I_j, each stratum ordered by descending row index"""
        result: Dict[int, List[Monomial]] = {}
        for f in self.monomials:
            result.setdefault(f.degree, []).append(f)
        return {
            degree: tuple(sorted(group, key=self.row_of, reverse=True))
            for degree, group in sorted(result.items())
        }

    @property
    def max_degree_monomials(self) -> Tuple[Monomial, ...]:
        """I_r"""
        return self.strata[self.r]

    @cached_property
    def row_indices(self) -> Tuple[int, ...]:
        """A, ascending"""
        return tuple(sorted(self.row_of(f) for f in self.monomials))

    @cached_property
    def row_set(self) -> FrozenSet[int]:
        return frozenset(self.row_indices)

    @property
    def max_degree_rows(self) -> Tuple[int, ...]:
        """A_{m-r}, descending"""
        return tuple(self.row_of(f) for f in self.max_degree_monomials)

    def describe(self) -> str:
        return f'({self.N},{self.K}) code, m={self.m}, r={self.r}, w_min={self.w_min}'


def _build(monomials: Iterable[Monomial], m: int, strict: bool) -> CodeSpec:
    monomials = frozenset(monomials)
    additions: Tuple[int, ...] = ()
    if not strict:
        closed = frozenset(decreasing_closure(monomials, m))
        additions = tuple(sorted((row_index_of(f, m) for f in closed - monomials), reverse=True))
        if additions:
            logger.info('decreasing_closure_applied', m=m, added=len(additions))
        monomials = closed
    spec = CodeSpec(m=m, monomials=monomials, closure_additions=additions)
    logger.debug('code_constructed', N=spec.N, K=spec.K, r=spec.r)
    return spec


def from_row_indices(A: Iterable[int], m: int, strict: bool = True) -> CodeSpec:
    """
    Build a code from row indices of G_N

    Args:
        A: Row indices in [0, 2^m)
        m: Number of variables
        strict: Reject non-decreasing input instead of completing it

    Returns:
        CodeSpec; in non-strict mode closure_additions lists the rows that were added
    """
    m = validate_m(m, get_config().MAX_M)
    A = list(A)
    for i in A:
        if not 0 <= i < (1 << m):
            raise IndexOutOfRange(f'Row index {i} outside [0, {1 << m})', field='rows', details={'row': i, 'm': m})
    if len(set(A)) != len(A):
        duplicates = sorted({i for i in A if A.count(i) > 1})
        raise ValidationError('Duplicate row indices', field='rows', details={'duplicates': duplicates})
    return _build((monomial_of_row(i, m) for i in A), m, strict)


def from_monomials(monomials: Iterable[Monomial], m: int, strict: bool = True) -> CodeSpec:
    m = validate_m(m, get_config().MAX_M)
    return _build(monomials, m, strict)


def reed_muller(r: int, m: int) -> CodeSpec:
    """R(r, m): every monomial of degree at most r"""
    m = validate_m(m, get_config().MAX_M)
    if not 0 <= r <= m:
        raise ValidationError(f'Reed-Muller order must satisfy 0 <= r <= {m}', field='r', details={'r': r})
    monomials = frozenset(
        Monomial.from_vars(c) for j in range(r + 1) for c in combinations(range(m), j)
    )
    return CodeSpec(m=m, monomials=monomials)


def to_row_indices(spec: CodeSpec) -> List[int]:
    return list(spec.row_indices)


def max_degree_pairs(spec: CodeSpec) -> List[MonomialPair]:
    """
    Unordered pairs {f, g} of I_r whose gcd has degree r-2

    Ordered by row index of f descending, then row index of g descending,
    where f is the member with the larger row index.
    """
    if spec.r < 2:
        return []
    ranked = spec.max_degree_monomials
    pairs = []
    for a, f in enumerate(ranked):
        for g in ranked[a + 1:]:
            h = mono_gcd(f, g)
            if h.degree == spec.r - 2:
                pairs.append(MonomialPair(f, g, h))
    return pairs


def generator_rows(spec: CodeSpec) -> List[Evaluation]:
    """ev(f) for every f in I, by descending row index"""
    ordered = sorted(spec.monomials, key=spec.row_of, reverse=True)
    return [evaluate(f, spec.m) for f in ordered]
