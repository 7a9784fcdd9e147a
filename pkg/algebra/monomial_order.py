"""
Monomial Orders - الترتيب الجزئي للحدود
The orders on squarefree monomials used by decreasing monomial codes:
divisibility, the shift order on equal degrees, and their combination.
"""

from collections import deque
from typing import Iterable, Iterator, Optional, Set, Tuple

from algebra.boolean_ring import Monomial
from utils.validation_helpers import IndexOutOfRange, NotDecreasing


def divides_order(f: Monomial, g: Monomial) -> bool:
    """f <=_w g iff f | g"""
    return f.divides(g)


def shift_order(f: Monomial, g: Monomial) -> bool:
    """f <=_sh g; false when the degrees differ"""
    if f.degree != g.degree:
        return False
    return all(i <= j for i, j in zip(f.vars, g.vars))


def preceq(f: Monomial, g: Monomial) -> bool:
    """
    f <= g iff some g* | g has f <=_sh g*

    The s = deg(f) largest indices of g dominate every other s-subset of g
    elementwise, so they are the only witness that needs checking.
    """
    s, t = f.degree, g.degree
    if s > t:
        return False
    top = g.vars[t - s:]
    return all(i <= j for i, j in zip(f.vars, top))


def immediate_predecessors(f: Monomial) -> Iterator[Monomial]:
    """Monomials obtained from f by dropping one variable or shifting one down by one"""
    mask = f.mask
    for i in f.vars:
        yield Monomial(mask & ~(1 << i))
        if i > 0 and not mask >> (i - 1) & 1:
            yield Monomial((mask & ~(1 << i)) | (1 << (i - 1)))


def find_decreasing_witness(I: Iterable[Monomial]) -> Optional[Tuple[Monomial, Monomial]]:
    """
    Return a pair (g, f) with f in I, g <= f and g not in I, or None

    <= is the transitive closure of the immediate-predecessor moves, so checking
    those moves for every member decides the property.
    """
    members = set(I)
    for f in sorted(members):
        for g in immediate_predecessors(f):
            if g not in members:
                return g, f
    return None


def _check_range(I: Iterable[Monomial], m: int) -> None:
    for f in I:
        if not f.fits(m):
            raise IndexOutOfRange(f'{f} uses a variable outside [0, {m})', field='monomials', details={'m': m})


def is_decreasing(I: Iterable[Monomial], m: int) -> bool:
    I = set(I)
    _check_range(I, m)
    return find_decreasing_witness(I) is None


def check_decreasing(I: Iterable[Monomial], m: int) -> None:
    """Raise NotDecreasing carrying a witness when I is not closed downward"""
    I = set(I)
    _check_range(I, m)
    witness = find_decreasing_witness(I)
    if witness is not None:
        g, f = witness
        raise NotDecreasing(
            f'Monomial set is not decreasing: {g} <= {f} but {g} is missing',
            details={'missing': list(g.vars), 'member': list(f.vars)}
        )


def decreasing_closure(I: Iterable[Monomial], m: int) -> Set[Monomial]:
    """Smallest decreasing superset of I"""
    closure = set(I)
    _check_range(closure, m)
    queue = deque(closure)
    while queue:
        f = queue.popleft()
        for g in immediate_predecessors(f):
            if g not in closure:
                closure.add(g)
                queue.append(g)
    return closure
