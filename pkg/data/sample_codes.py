"""
Reference Codes - الشيفرات المرجعية
Named codes with published w_min and 1.5 w_min counts. Codes given by their
max-degree rows are completed by decreasing closure, which leaves both counts
unchanged.
"""

from pathlib import Path
from typing import Dict, List

from models.code_model import CodeSpec, from_row_indices, reed_muller
from utils.validation_helpers import ValidationError, parse_row_indices

AFILES_DIR = Path(__file__).parent / 'afiles'

SAMPLE_CODES: Dict[str, Dict] = {
    'polar_128_64': {
        'description': '(128,64) polar code, design-SNR 0 dB',
        'm': 7,
        'max_degree_rows': [112, 104, 100, 98, 97, 88, 84],
        'expected': (688, 5376),
    },
    'polar_128_64_snr3': {
        'description': '(128,64) polar code, design-SNR 3 dB',
        'm': 7,
        'max_degree_rows': [112, 104, 100, 98, 88],
        'expected': (304, 768),
    },
    'polar_128_64_snr6': {
        'description': '(128,64) polar code, design-SNR 6 dB',
        'm': 7,
        'max_degree_rows': [112, 104],
        'expected': (48, 0),
    },
    'rm_3_7': {
        'description': 'Reed-Muller R(3,7)',
        'rm': (3, 7),
        'expected': (94488, 74078592),
    },
    'polar_2048_1024_snr3': {
        'description': '(2048,1024) polar code, design-SNR 3 dB',
        'm': 11,
        'max_degree_rows': [1920, 1856],
        'expected': (384, 0),
    },
    'example5_m8': {
        'description': 'm = 8 code with I_4 = {x0x1x2x3, x0x1x2x4, x0x1x2x5, x0x1x3x4}',
        'm': 8,
        'max_degree_rows': [240, 232, 216, 228],
        'expected': (176, None),
    },
    'rm_2_5': {
        'description': 'Reed-Muller R(2,5), the (32,16) code',
        'rm': (2, 5),
        'expected': (None, None),
    },
}


def sample_names() -> List[str]:
    return list(SAMPLE_CODES)


def load_sample(name: str) -> CodeSpec:
    """Build a named reference code"""
    entry = SAMPLE_CODES.get(name)
    if entry is None:
        raise ValidationError(
            f"Unknown sample code '{name}'",
            field='name', details={'available': sample_names()}
        )
    if 'rm' in entry:
        return reed_muller(*entry['rm'])
    return from_row_indices(entry['max_degree_rows'], entry['m'], strict=False)


def load_afile(path, m: int, strict: bool = True) -> CodeSpec:
    """Read an A-file from disk and build the code"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ValidationError(f'Cannot read {path}: {e.strerror}', field='rows', details={'path': str(path)})
    return from_row_indices(parse_row_indices(text), m, strict=strict)
