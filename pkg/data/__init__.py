# Reference codes
from .sample_codes import AFILES_DIR, SAMPLE_CODES, load_afile, load_sample, sample_names

__all__ = ['AFILES_DIR', 'SAMPLE_CODES', 'load_afile', 'load_sample', 'sample_names']
