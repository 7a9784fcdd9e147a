"""
Boolean Ring - حلقة الحدوديات الثنائية
Arithmetic in R_m = F_2[x_0..x_{m-1}]/(x_i^2 - x_i), evaluation vectors,
and the monomial <-> row-index correspondence of the polar transform G_N.

Evaluation convention: for N = 2^m, position p of ev(P) holds P evaluated at the
point whose integer encoding is N-1-p, with x_0 the least significant bit.
Internally an evaluation is an int whose bit j is the value at point j, so the
MSB-first bit string of that int lists positions 0..N-1 in order.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Tuple

import numpy as np

from utils.validation_helpers import IndexOutOfRange, NonDivisor, ValidationError


@dataclass(frozen=True, order=True)
class Monomial:
    """Squarefree monomial, stored as the bit mask of its variable indices"""

    mask: int = 0

    def __post_init__(self):
        if self.mask < 0:
            raise ValidationError('Monomial mask must be non-negative', field='mask')

    @classmethod
    def from_vars(cls, variables: Iterable[int]) -> 'Monomial':
        mask = 0
        for i in variables:
            if i < 0:
                raise IndexOutOfRange(f'Negative variable index {i}', field='vars')
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def one(cls) -> 'Monomial':
        return cls(0)

    @property
    def vars(self) -> Tuple[int, ...]:
        """ind(f), ascending"""
        mask = self.mask
        return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def is_one(self) -> bool:
        return self.mask == 0

    def divides(self, other: 'Monomial') -> bool:
        return self.mask & other.mask == self.mask

    def fits(self, m: int) -> bool:
        return self.mask >> m == 0

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        return Monomial(self.mask | other.mask)

    def __str__(self) -> str:
        if self.is_one:
            return '1'
        return ''.join(f'x{i}' for i in self.vars)


@dataclass(frozen=True)
class Polynomial:
    """Element of R_m in algebraic normal form: the set of monomial masks in its support"""

    terms: FrozenSet[int] = frozenset()

    @classmethod
    def zero(cls) -> 'Polynomial':
        return cls()

    @classmethod
    def one(cls) -> 'Polynomial':
        return cls(frozenset({0}))

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> 'Polynomial':
        # duplicates cancel over GF(2)
        terms = set()
        for f in monomials:
            terms ^= {f.mask}
        return cls(frozenset(terms))

    @classmethod
    def of(cls, f: Monomial) -> 'Polynomial':
        return cls(frozenset({f.mask}))

    @property
    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(Monomial(mask) for mask in self.canonical())

    def canonical(self) -> Tuple[int, ...]:
        """Monomial masks sorted ascending"""
        return tuple(sorted(self.terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((t.bit_count() for t in self.terms), default=-1)

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        return Polynomial(self.terms ^ other.terms)

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        product = set()
        for a in self.terms:
            for b in other.terms:
                product ^= {a | b}
        return Polynomial(frozenset(product))

    def evaluate(self, m: int) -> 'Evaluation':
        return evaluate(self, m)

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        ordered = sorted(self.terms, key=lambda t: (-t.bit_count(), t))
        return ' + '.join(str(Monomial(t)) for t in ordered)


@dataclass(frozen=True)
class Evaluation:
    """ev(P) as a length-2^m bit vector"""

    word: int
    m: int

    @property
    def length(self) -> int:
        return 1 << self.m

    @property
    def weight(self) -> int:
        return self.word.bit_count()

    @property
    def bitstring(self) -> str:
        """Positions 0..N-1, left to right"""
        return format(self.word, f'0{self.length}b')

    @property
    def bits(self) -> np.ndarray:
        return np.frombuffer(self.bitstring.encode('ascii'), dtype=np.uint8) - ord('0')

    def __xor__(self, other: 'Evaluation') -> 'Evaluation':
        return Evaluation(self.word ^ other.word, self.m)

    def __and__(self, other: 'Evaluation') -> 'Evaluation':
        return Evaluation(self.word & other.word, self.m)

    def __str__(self) -> str:
        return self.bitstring


def all_ones_word(m: int) -> int:
    return (1 << (1 << m)) - 1


@lru_cache(maxsize=None)
def variable_word(i: int, m: int) -> int:
    """Evaluation word of x_i: blocks of 2^i zeros then 2^i ones, repeated"""
    half = 1 << i
    period = half << 1
    block = ((1 << half) - 1) << half
    return block * (all_ones_word(m) // ((1 << period) - 1))


@lru_cache(maxsize=1 << 16)
def monomial_word(mask: int, m: int) -> int:
    word = all_ones_word(m)
    i = 0
    while mask:
        if mask & 1:
            word &= variable_word(i, m)
        mask >>= 1
        i += 1
    return word


def _check_fits(mask: int, m: int) -> None:
    if mask >> m:
        raise IndexOutOfRange(
            f'Variable index {mask.bit_length() - 1} outside [0, {m})',
            field='vars',
            details={'m': m}
        )


def evaluate(P, m: int) -> Evaluation:
    """
    Evaluate a polynomial (or a monomial) at every point of F_2^m

    Args:
        P: Polynomial or Monomial
        m: Number of variables

    Returns:
        Evaluation of length 2^m
    """
    if isinstance(P, Monomial):
        P = Polynomial.of(P)
    word = 0
    for t in P.terms:
        _check_fits(t, m)
        word ^= monomial_word(t, m)
    return Evaluation(word, m)


def mono_gcd(f: Monomial, g: Monomial) -> Monomial:
    return Monomial(f.mask & g.mask)


def mono_divide(f: Monomial, h: Monomial) -> Monomial:
    """f / h, defined when h | f"""
    if not h.divides(f):
        raise NonDivisor(
            f'{h} does not divide {f}',
            details={'f': list(f.vars), 'h': list(h.vars)}
        )
    return Monomial(f.mask & ~h.mask)


def row_index_of(f: Monomial, m: int) -> int:
    """Row of G_N associated with f: the m-bit complement of ind(f)"""
    _check_fits(f.mask, m)
    return ((1 << m) - 1) ^ f.mask


def monomial_of_row(i: int, m: int) -> Monomial:
    if not 0 <= i < (1 << m):
        raise IndexOutOfRange(f'Row index {i} outside [0, {1 << m})', field='rows', details={'row': i, 'm': m})
    return Monomial(((1 << m) - 1) ^ i)


def poly_add(P: Polynomial, Q: Polynomial) -> Polynomial:
    return P + Q


def poly_mul(P: Polynomial, Q: Polynomial) -> Polynomial:
    return P * Q


def linear_form(i: int, lower: Iterable[int] = (), constant: bool = False) -> Polynomial:
    """x_i + sum of x_j over lower + constant"""
    terms = {1 << i}
    for j in lower:
        terms ^= {1 << j}
    if constant:
        terms ^= {0}
    return Polynomial(frozenset(terms))


def all_monomials(m: int, max_degree: int = None) -> List[Monomial]:
    """Every monomial of M_m (optionally up to a degree), ascending by mask"""
    limit = m if max_degree is None else max_degree
    return [Monomial(mask) for mask in range(1 << m) if mask.bit_count() <= limit]
