import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value not in (None, '') else default


class Config:
    """Application configuration class"""

    # Code construction limits
    MAX_M = _env_int('MAX_M', 30)

    # Oracle limits
    ORACLE_K_LIMIT = _env_int('ORACLE_K_LIMIT', 24)
    ORACLE_MAX_M = _env_int('ORACLE_MAX_M', 11)
    LOW_TABLE_BITS = _env_int('LOW_TABLE_BITS', 12)
    ORBIT_CAP = _env_int('ORBIT_CAP', 1 << 20)
    CENSUS_CAP = _env_int('CENSUS_CAP', 20000)
    FULL_GROUP_MAX_M = _env_int('FULL_GROUP_MAX_M', 5)

    # Workers (0 = one per CPU)
    THREADS = _env_int('THREADS', 0)

    # Sampling checks
    LEMMA2_TRIALS = _env_int('LEMMA2_TRIALS', 1000)
    RANDOM_SEED = _env_int('RANDOM_SEED', 2023)

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FILE = os.getenv('LOG_FILE') or None
    LOG_JSON = os.getenv('LOG_JSON', 'False').lower() == 'true'

    # Output
    JSON_INDENT = _env_int('JSON_INDENT', 2)

    # Flask
    DEBUG = os.getenv('FLASK_DEBUG', 'False').lower() == 'true'
    TESTING = False
    JSON_SORT_KEYS = False
    MAX_CONTENT_LENGTH = 1 * 1024 * 1024  # A-sets are small

    @classmethod
    def worker_count(cls) -> int:
        """Resolve THREADS=0 to the number of CPUs"""
        if cls.THREADS > 0:
            return cls.THREADS
        return os.cpu_count() or 1


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    TESTING = False
    LOG_JSON = True


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    ORACLE_K_LIMIT = 20
    THREADS = 1
    LEMMA2_TRIALS = 200
    RANDOM_SEED = 7
    LOG_LEVEL = 'WARNING'


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(name: str = None):
    """Return the configuration class selected by name or MONOCODE_ENV"""
    name = name or os.getenv('MONOCODE_ENV', 'default')
    return config.get(name, config['default'])
