"""
betti-bounds Configuration Management
Environment-based configuration for development, production and testing
"""

import logging
import os
from logging.handlers import RotatingFileHandler
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def default_data_dir() -> Path:
    """Per-user directory for caches and logs

    ``BETTI_BOUNDS_HOME`` wins, then ``$XDG_CACHE_HOME/betti-bounds``,
    then ``~/.cache/betti-bounds``.
    """
    home = os.environ.get('BETTI_BOUNDS_HOME')
    if home:
        return Path(home)
    base = os.environ.get('XDG_CACHE_HOME')
    return (Path(base) if base else Path.home() / '.cache') / 'betti-bounds'


class Config:
    """Base configuration class"""

    DATA_DIR = default_data_dir()

    # Result cache settings
    CACHE_ENABLED = True
    CACHE_DIR = Path(os.environ.get('BETTI_BOUNDS_CACHE_DIR') or DATA_DIR / 'strata')
    CODE_VERSION_TAG = '1.0'

    # Computation defaults
    PARALLELISM = _env_int('BETTI_BOUNDS_WORKERS', 1)
    DEFAULT_CAP = 12
    DEFAULT_DL_CONVENTION = 'strict'

    # Logging settings; stderr carries CLI errors, so the console stays quiet by default
    LOG_LEVEL = 'INFO'
    CONSOLE_LOG_LEVEL = 'WARNING'
    LOG_FILE = DATA_DIR / 'logs' / 'betti_bounds.log'
    RUN_LOG_FILE = DATA_DIR / 'logs' / 'runs.log'
    LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'

    @classmethod
    def init_app(cls, context):
        """Initialize a run context with configuration"""
        if cls.CACHE_ENABLED:
            try:
                Path(cls.CACHE_DIR).mkdir(parents=True, exist_ok=True)
            except OSError as e:
                logging.getLogger(__name__).warning(f"Cannot create cache dir {cls.CACHE_DIR}: {e}")
        configure_logging(cls)


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    TESTING = False

    LOG_LEVEL = 'DEBUG'
    CONSOLE_LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    TESTING = False

    @classmethod
    def init_app(cls, context):
        """Initialize production run context"""
        super(ProductionConfig, cls).init_app(context)

        package_logger = logging.getLogger('betti_bounds')
        if any(isinstance(h, RotatingFileHandler) for h in package_logger.handlers):
            return
        try:
            cls.LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                cls.LOG_FILE,
                maxBytes=10240000,  # 10MB
                backupCount=10
            )
        except OSError as e:
            package_logger.warning(f"Log file {cls.LOG_FILE} unavailable: {e}")
            return
        file_handler.setFormatter(logging.Formatter(cls.LOG_FORMAT))
        file_handler.setLevel(logging.INFO)
        package_logger.addHandler(file_handler)
        package_logger.info('betti-bounds startup')


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    DEBUG = True

    # Tests point CACHE_DIR at a tmp_path
    CACHE_ENABLED = False
    RUN_LOG_FILE = None

    LOG_LEVEL = 'CRITICAL'
    CONSOLE_LOG_LEVEL = 'CRITICAL'


def configure_logging(config_class) -> logging.Handler:
    """Set the package log level and the single console handler"""
    package_logger = logging.getLogger('betti_bounds')
    package_logger.setLevel(getattr(logging, config_class.LOG_LEVEL, logging.INFO))
    console = next((h for h in package_logger.handlers
                    if isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler)),
                   None)
    if console is None:
        console = logging.StreamHandler()
        console.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        package_logger.addHandler(console)
    console.setLevel(getattr(logging, config_class.CONSOLE_LOG_LEVEL, logging.WARNING))
    return console


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(name: str = None):
    """Get configuration based on environment"""
    return config.get(name or os.environ.get('BETTI_BOUNDS_ENV', 'default'), ProductionConfig)
