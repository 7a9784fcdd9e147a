"""
REPORT Models - نماذج التقارير
Results of the closed-form enumerators and of the brute-force oracle
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra.boolean_ring import Monomial
from models.base import BaseModel


@dataclass(frozen=True)
class PairRecord(BaseModel):
    """One summand of the 1.5 w_min count: a pair f, g of I_r with gcd h of degree r-2"""

    f_row: int
    g_row: int
    f: Monomial
    g: Monomial
    h: Monomial
    f_over_h: Monomial
    g_over_h: Monomial
    lambda_h: int
    lambda_f_part: int
    lambda_g_part: int
    alpha: int
    count: int

    @property
    def r(self) -> int:
        return self.f.degree

    @property
    def exponent(self) -> int:
        return self.r + 2 + self.lambda_h + self.lambda_f_part + self.lambda_g_part - self.alpha


@dataclass(frozen=True)
class WeightReport(BaseModel):
    """A_w for w in {w_min, 1.5 w_min}"""

    m: int
    r: int
    w_min: int
    A_wmin: int
    A_1p5wmin: int
    pairs: Tuple[PairRecord, ...] = ()

    @property
    def w_1p5(self) -> int:
        return 3 * self.w_min // 2

    def terms(self) -> List[Tuple[int, int]]:
        """(w, A_w) for the two weights; 1.5 w_min is dropped when it is not an integer"""
        result = [(self.w_min, self.A_wmin)]
        if self.w_min % 2 == 0:
            result.append((self.w_1p5, self.A_1p5wmin))
        return result


@dataclass(frozen=True)
class Spectrum(BaseModel):
    """Exact weight distribution of a code"""

    K: int
    N: int
    counts: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class CensusResult(BaseModel):
    """1.5 w_min codewords found as sums of two w_min codewords"""

    weight: int
    count: int
    codewords: frozenset = frozenset()

    def to_dict(self):
        return {'weight': self.weight, 'count': self.count}


@dataclass(frozen=True)
class CheckResult(BaseModel):
    name: str
    passed: bool
    expected: Optional[str] = None
    observed: Optional[str] = None
    note: str = ''


@dataclass(frozen=True)
class SampleCheckReport(BaseModel):
    """Outcome of a randomized membership check"""

    trials: int
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class CosetRecord(BaseModel):
    """Coset view of one qualifying pair: the core row sets of both leaders"""

    f_row: int
    g_row: int
    K_f: Tuple[int, ...]
    K_g: Tuple[int, ...]
    shared: Tuple[int, ...]
    r: int
    count: int
