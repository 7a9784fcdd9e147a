"""
🔎 Oracle - التحقق بالقوة الغاشمة
Independent ground truth for the closed-form counts: exhaustive weight
spectra over all 2^K messages, the explicit w_min codeword set built from
orbits, and the census of 1.5 w_min sums of two w_min codewords.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Set

import numpy as np

from algebra.boolean_ring import Evaluation, evaluate
from config.settings import get_config
from enumeration.weight_enumerator import count_1p5, count_min_weight, count_pair_coset
from groups.lta_group import iter_orbit, orbit_cardinality
from models.code_model import CodeSpec, generator_rows
from models.reports import CensusResult, CheckResult, Spectrum
from utils.logging_helpers import get_logger
from utils.validation_helpers import TooLarge, UnsupportedCode

logger = get_logger(__name__)

_WORD_BITS = 64
_WORD_MASK = (1 << _WORD_BITS) - 1
_POPCOUNT8 = np.array([bin(i).count('1') for i in range(256)], dtype=np.uint16)


def _to_words(word: int, n_words: int) -> List[int]:
    return [(word >> (_WORD_BITS * k)) & _WORD_MASK for k in range(n_words)]


def _from_words(words: np.ndarray) -> int:
    return sum(int(v) << (_WORD_BITS * k) for k, v in enumerate(words))


def _weights(block: np.ndarray) -> np.ndarray:
    """Hamming weight of every row of a (rows, n_words) uint64 block"""
    return _POPCOUNT8[block.view(np.uint8)].reshape(block.shape[0], -1).sum(axis=1)


def _gray(t: int) -> int:
    return t ^ (t >> 1)


class GeneratorTable:
    """
    Generator rows split into a low part, expanded once into the XOR of every
    subset, and a high part walked in Gray-code order
    """

    def __init__(self, spec: CodeSpec, low_bits: int):
        self.N = spec.N
        self.K = spec.K
        self.n_words = max(1, spec.N // _WORD_BITS)
        matrix = np.array(
            [_to_words(row.word, self.n_words) for row in generator_rows(spec)],
            dtype=np.uint64
        )
        self.low_bits = min(self.K, low_bits)
        self.high = matrix[self.low_bits:]
        self.low = np.zeros((1 << self.low_bits, self.n_words), dtype=np.uint64)
        for b in range(self.low_bits):
            size = 1 << b
            self.low[size:2 * size] = self.low[:size] ^ matrix[b]

    @property
    def high_steps(self) -> int:
        return 1 << len(self.high)

    def start_word(self, t: int) -> np.ndarray:
        """Codeword of the high rows selected by the t-th Gray code"""
        code = np.zeros(self.n_words, dtype=np.uint64)
        g = _gray(t)
        for bit in range(len(self.high)):
            if g >> bit & 1:
                code ^= self.high[bit]
        return code

    def walk(self, start: int, stop: int, visit: Callable[[np.ndarray], None]) -> None:
        """Call visit with the block of 2^low_bits codewords for Gray steps start..stop-1"""
        code = self.start_word(start)
        visit(self.low ^ code)
        for t in range(start + 1, stop):
            code ^= self.high[(t & -t).bit_length() - 1]
            visit(self.low ^ code)


def _check_oracle_size(spec: CodeSpec, k_limit: Optional[int]) -> int:
    config = get_config()
    k_limit = config.ORACLE_K_LIMIT if k_limit is None else k_limit
    if spec.K > k_limit:
        raise TooLarge(
            f'Brute force over 2^{spec.K} messages exceeds the limit 2^{k_limit}',
            field='k_limit', details={'K': spec.K, 'k_limit': k_limit}
        )
    if spec.m > config.ORACLE_MAX_M:
        raise TooLarge(
            f'Brute force is limited to N <= 2^{config.ORACLE_MAX_M}',
            field='m', details={'m': spec.m}
        )
    return k_limit


def _segments(steps: int, workers: int):
    workers = max(1, min(workers, steps))
    bounds = np.linspace(0, steps, workers + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def brute_force_spectrum(spec: CodeSpec, k_limit: int = None, threads: int = None) -> Spectrum:
    """
    Exact weight distribution over all 2^K codewords

    Args:
        spec: Code to enumerate
        k_limit: Largest K accepted; defaults to ORACLE_K_LIMIT
        threads: Worker count; 0 or None picks the configured default

    Raises:
        TooLarge: when K > k_limit or N is beyond ORACLE_MAX_M
    """
    _check_oracle_size(spec, k_limit)
    config = get_config()
    table = GeneratorTable(spec, config.LOW_TABLE_BITS)
    workers = threads or config.worker_count()

    def run(segment):
        start, stop = segment
        counts = np.zeros(spec.N + 1, dtype=np.int64)

        def visit(block):
            counts[:] += np.bincount(_weights(block), minlength=spec.N + 1)

        table.walk(start, stop, visit)
        logger.debug('oracle_segment_done', start=start, stop=stop)
        return counts

    segments = _segments(table.high_steps, workers)
    if len(segments) == 1:
        partials = [run(segments[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(segments)) as pool:
            partials = list(pool.map(run, segments))
    total = np.sum(partials, axis=0)
    counts = {int(w): int(c) for w, c in enumerate(total) if c}
    logger.info('spectrum_computed', N=spec.N, K=spec.K, segments=len(segments), weights=len(counts))
    return Spectrum(K=spec.K, N=spec.N, counts=counts)


def brute_force_codewords(spec: CodeSpec, weight: int, k_limit: int = None) -> Set[Evaluation]:
    """Every codeword of the given weight, by exhaustive enumeration"""
    _check_oracle_size(spec, k_limit)
    table = GeneratorTable(spec, get_config().LOW_TABLE_BITS)
    found: Set[Evaluation] = set()

    def visit(block):
        for i in np.flatnonzero(_weights(block) == weight):
            found.add(Evaluation(_from_words(block[i]), spec.m))

    table.walk(0, table.high_steps, visit)
    return found


def gf2_rank(words: Iterable[int]) -> int:
    """Rank over GF(2) of int bitsets"""
    basis = {}
    for v in words:
        while v:
            pivot = v.bit_length() - 1
            if pivot not in basis:
                basis[pivot] = v
                break
            v ^= basis[pivot]
    return len(basis)


def min_weight_set(spec: CodeSpec) -> Set[Evaluation]:
    """
    Union over f in I_r of the evaluations of LTA(m,2)_f . f

    Raises:
        TooLarge: when the orbits together exceed ORBIT_CAP polynomials
    """
    cap = get_config().ORBIT_CAP
    expected = count_min_weight(spec)
    if expected > cap:
        raise TooLarge(
            f'{expected} w_min codewords exceed the orbit cap {cap}',
            details={'A_wmin': expected, 'cap': cap}
        )
    result: Set[Evaluation] = set()
    produced = 0
    for f in spec.max_degree_monomials:
        for P in iter_orbit(f, f, spec.m):
            result.add(evaluate(P, spec.m))
            produced += 1
    if produced != len(result):
        logger.warning('orbit_overlap_detected', produced=produced, distinct=len(result))
    logger.debug('min_weight_set_built', size=len(result), orbits=len(spec.max_degree_monomials))
    return result


def one_five_census(spec: CodeSpec, minimum: Set[Evaluation] = None) -> CensusResult:
    """
    XOR of every unordered pair of distinct w_min codewords, kept when the
    sum has weight 1.5 w_min

    Raises:
        UnsupportedCode: when r = m
        TooLarge: when there are more than CENSUS_CAP w_min codewords
    """
    if spec.r == spec.m:
        raise UnsupportedCode('1.5 w_min is not an integer weight when r = m', details={'r': spec.r})
    minimum = min_weight_set(spec) if minimum is None else minimum
    cap = get_config().CENSUS_CAP
    if len(minimum) > cap:
        raise TooLarge(
            f'{len(minimum)} w_min codewords exceed the census cap {cap}',
            details={'A_wmin': len(minimum), 'cap': cap}
        )
    target = 3 * spec.w_min // 2
    words = [c.word for c in minimum]
    sums = {a ^ b for a, b in combinations(words, 2) if (a ^ b).bit_count() == target}
    codewords = frozenset(Evaluation(word, spec.m) for word in sums)
    return CensusResult(weight=target, count=len(codewords), codewords=codewords)


def _check(name: str, expected, observed, note: str = '') -> CheckResult:
    return CheckResult(
        name=name,
        passed=expected == observed,
        expected=str(expected),
        observed=str(observed),
        note=note
    )


def verify_code(spec: CodeSpec, k_limit: int = None, threads: int = None) -> List[CheckResult]:
    """
    Cross-check the closed-form counts against exhaustive enumeration

    Raises:
        TooLarge: when the code is beyond the oracle limits
    """
    spectrum = brute_force_spectrum(spec, k_limit, threads)
    checks = [
        _check('generator_rank', spec.K, gf2_rank(row.word for row in generator_rows(spec))),
        _check('spectrum_total', 1 << spec.K, spectrum.total),
        _check(
            'no_weight_below_w_min', 0,
            sum(c for w, c in spectrum.counts.items() if 0 < w < spec.w_min)
        ),
        _check('A_wmin', count_min_weight(spec), spectrum[spec.w_min]),
    ]

    minimum = min_weight_set(spec)
    checks.append(_check('orbit_union_size', spectrum[spec.w_min], len(minimum)))
    brute_minimum = brute_force_codewords(spec, spec.w_min, k_limit)
    checks.append(_check('orbit_union_set', True, minimum == brute_minimum, 'w_min codewords as sets'))

    if spec.r < spec.m:
        report = count_1p5(spec)
        checks.append(_check('A_1.5wmin', report.A_1p5wmin, spectrum[report.w_1p5]))
        census = one_five_census(spec, minimum)
        checks.append(_check('census_size', report.A_1p5wmin, census.count))
        brute_1p5 = brute_force_codewords(spec, report.w_1p5, k_limit)
        checks.append(_check('census_set', True, set(census.codewords) == brute_1p5, '1.5 w_min codewords as sets'))
        for p in report.pairs:
            checks.append(_check(
                f'pair_{p.f_row}_{p.g_row}', p.count,
                count_pair_coset(spec, p.f_row, p.g_row), 'orbit formula against core row sets'
            ))

    failed = [c.name for c in checks if not c.passed]
    logger.info('verification_finished', N=spec.N, K=spec.K, checks=len(checks), failed=failed)
    return checks
