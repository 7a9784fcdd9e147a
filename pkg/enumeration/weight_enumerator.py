"""
📊 Weight Enumerator - عدّاد الأوزان
Closed-form counts of the w_min and 1.5 w_min codewords of a decreasing
monomial code, the coset (core row set) view of each pair, the pair table and
the truncated union bound on the ML block error rate.
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.special import erfc

from algebra.boolean_ring import mono_divide
from groups.lta_group import lambda_total, orbit_cardinality, orbit_exponent_breakdown
from groups.minkowski_sums import DegreeTwoPair, collision_degree
from models.code_model import CodeSpec, MonomialPair, from_row_indices, max_degree_pairs
from models.reports import CosetRecord, PairRecord, WeightReport
from utils.logging_helpers import get_logger
from utils.validation_helpers import BadPair, RowNotMaxDegree, UnsupportedCode, validate_rate

logger = get_logger(__name__)


def count_min_weight(spec: CodeSpec) -> int:
    """A_wmin = sum over f in I_r of 2^(deg f + |lambda_f|)"""
    return sum(orbit_cardinality(f) for f in spec.max_degree_monomials)


def pair_record(spec: CodeSpec, pair: MonomialPair) -> PairRecord:
    """One summand 2^(r+2+|lambda_h|+|lambda_f(f/h)|+|lambda_g(g/h)|-alpha)"""
    f, g, h = pair
    f_part, g_part = mono_divide(f, h), mono_divide(g, h)
    alpha = collision_degree(DegreeTwoPair.canonical(f_part, g_part))
    lambda_h = lambda_total(h, h)
    lambda_f_part = lambda_total(f, f_part)
    lambda_g_part = lambda_total(g, g_part)
    exponent = spec.r + 2 + lambda_h + lambda_f_part + lambda_g_part - alpha
    return PairRecord(
        f_row=spec.row_of(f),
        g_row=spec.row_of(g),
        f=f, g=g, h=h,
        f_over_h=f_part,
        g_over_h=g_part,
        lambda_h=lambda_h,
        lambda_f_part=lambda_f_part,
        lambda_g_part=lambda_g_part,
        alpha=alpha,
        count=1 << exponent
    )


def count_1p5(spec: CodeSpec) -> WeightReport:
    """
    A_wmin and A_1.5wmin with one PairRecord per qualifying pair of I_r

    Codes with r < 2, or without a pair whose gcd has degree r-2, report 0.

    Raises:
        UnsupportedCode: when r = m
    """
    if spec.r == spec.m:
        raise UnsupportedCode(
            f'1.5 w_min counting needs r < m (got r = m = {spec.m})',
            details={'r': spec.r, 'm': spec.m}
        )
    pairs = tuple(pair_record(spec, pair) for pair in max_degree_pairs(spec))
    report = WeightReport(
        m=spec.m,
        r=spec.r,
        w_min=spec.w_min,
        A_wmin=count_min_weight(spec),
        A_1p5wmin=sum(p.count for p in pairs),
        pairs=pairs
    )
    logger.info(
        'weights_enumerated', N=spec.N, K=spec.K, r=spec.r,
        A_wmin=report.A_wmin, A_1p5wmin=report.A_1p5wmin, pairs=len(pairs)
    )
    return report


def weight_enum(rows: Iterable[int], m: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """
    (w, A_w) for the weights w_min and 1.5 w_min of the code with row set rows

    Returns:
        ((w_min, 1.5 w_min), (A_wmin, A_1.5wmin))
    """
    report = count_1p5(from_row_indices(rows, m))
    return (report.w_min, report.w_1p5), (report.A_wmin, report.A_1p5wmin)


def _require_max_degree_row(spec: CodeSpec, row: int, field: str) -> None:
    if row not in spec.max_degree_rows:
        raise RowNotMaxDegree(
            f'Row {row} is not a max-degree row of the code',
            field=field, details={'row': row, 'max_degree_rows': list(spec.max_degree_rows)}
        )


def core_row_set(spec: CodeSpec, f_row: int) -> Tuple[int, ...]:
    """
    K_f: rows i of A with i > f_row whose support has exactly one index outside supp(f_row)

    In a decreasing code these are the rows obtained from f by dropping or
    shifting down one variable, so |K_f| = deg(f) + |lambda_f|.
    """
    _require_max_degree_row(spec, f_row, 'f_row')
    return tuple(i for i in spec.row_indices if i > f_row and (i & ~f_row).bit_count() == 1)


def count_pair_coset(spec: CodeSpec, f_row: int, g_row: int) -> int:
    """
    A_1.5wmin{f, g} = 2^(|K_f| + |K_g| - (r-2) - |K_f & K_g|)

    Raises:
        RowNotMaxDegree: when a row is not in A_{m-r}
        BadPair: when the supports differ in other than two positions each way
    """
    _require_max_degree_row(spec, f_row, 'f_row')
    _require_max_degree_row(spec, g_row, 'g_row')
    if (g_row & ~f_row).bit_count() != 2:
        raise BadPair(
            f'Rows {f_row} and {g_row} do not differ in exactly two support indices',
            details={'f_row': f_row, 'g_row': g_row}
        )
    K_f, K_g = set(core_row_set(spec, f_row)), set(core_row_set(spec, g_row))
    return 1 << (len(K_f) + len(K_g) - (spec.r - 2) - len(K_f & K_g))


def coset_pairs(spec: CodeSpec) -> List[CosetRecord]:
    records = []
    for f, g, _ in max_degree_pairs(spec):
        f_row, g_row = spec.row_of(f), spec.row_of(g)
        K_f, K_g = core_row_set(spec, f_row), core_row_set(spec, g_row)
        records.append(CosetRecord(
            f_row=f_row,
            g_row=g_row,
            K_f=K_f,
            K_g=K_g,
            shared=tuple(sorted(set(K_f) & set(K_g))),
            r=spec.r,
            count=count_pair_coset(spec, f_row, g_row)
        ))
    return records


def q_function(x) -> np.ndarray:
    """Gaussian tail Q(x) = erfc(x / sqrt(2)) / 2"""
    return 0.5 * erfc(np.asarray(x, dtype=float) / np.sqrt(2.0))


def union_bound(report: WeightReport, R: float, ebn0_db: Sequence[float]) -> List[float]:
    """
    Truncated union bound sum_w A_w Q(sqrt(2 w R Eb/N0)) over w in {w_min, 1.5 w_min}

    Args:
        report: Counts to plug in
        R: Code rate in (0, 1]
        ebn0_db: Eb/N0 points in dB

    Returns:
        Bound per point, in the order given
    """
    R = validate_rate(R)
    ebn0 = np.power(10.0, np.asarray(ebn0_db, dtype=float) / 10.0)
    bound = np.zeros_like(ebn0)
    for w, A_w in report.terms():
        if A_w:
            bound += float(A_w) * q_function(np.sqrt(2.0 * w * R * ebn0))
    return bound.tolist()


def _power(exponent_terms: Sequence[int]) -> str:
    return '2^{' + '+'.join(str(t) for t in exponent_terms) + '}'


def pairs_table(report: WeightReport) -> pd.DataFrame:
    """Per-pair breakdown with the orbit sizes written as powers of two"""
    rows = []
    for p in report.pairs:
        deg_h, lam_h = orbit_exponent_breakdown(p.h)
        deg_f, lam_f = orbit_exponent_breakdown(p.f, p.f_over_h)
        deg_g, lam_g = orbit_exponent_breakdown(p.g, p.g_over_h)
        rows.append({
            'f_row, g_row': f'{p.f_row}, {p.g_row}',
            'ind(f), ind(g)': f'{list(p.f.vars)}, {list(p.g.vars)}',
            'ind(h)': str(list(p.h.vars)),
            'ind(f/h)': str(list(p.f_over_h.vars)),
            'ind(g/h)': str(list(p.g_over_h.vars)),
            '|LTA_h.h|': _power((deg_h, *lam_h)),
            '|LTA_f.f/h|': _power((deg_f, *lam_f)),
            '|LTA_g.g/h|': _power((deg_g, *lam_g)),
            'penalty': f'2^{{-{p.alpha}}}' if p.alpha else '1',
            'total': p.count,
        })
    columns = [
        'f_row, g_row', 'ind(f), ind(g)', 'ind(h)', 'ind(f/h)', 'ind(g/h)',
        '|LTA_h.h|', '|LTA_f.f/h|', '|LTA_g.g/h|', 'penalty', 'total'
    ]
    return pd.DataFrame(rows, columns=columns)
