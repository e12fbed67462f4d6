import logging
import os


# Configuration settings
class Config:
    """Base configuration"""

    # Dense state vectors stop at 2**13 amplitudes
    MAX_QUBITS = 13
    # The stabilizer-sum projector expands 2**(2n) products
    PROJECTOR_MAX_QUBITS = 8

    DENSE_SYMBOLIC_MAX_N = 6
    DENSE_ORACLE_MAX_N = 4

    STATE_TOLERANCE = 1e-10
    NORM_TOLERANCE = 1e-12
    ZERO_PROBABILITY = 1e-12

    DEFAULT_SEED = 2024
    DEFAULT_TRIALS = 20

    # Thread count for outcome sweeps (None runs serially)
    SWEEP_WORKERS = None

    LOG_LEVEL = os.environ.get("GRAPHCODE_LOG_LEVEL", "WARNING")

    @classmethod
    def init_logging(cls, level=None):
        """Configure the root logger once for the command line front end"""
        logging.basicConfig(
            level=level or cls.LOG_LEVEL,
            format="%(levelname)s %(name)s: %(message)s",
        )


# Development configuration with chatty logs and threaded sweeps
class DevelopmentConfig(Config):
    """Development configuration"""

    LOG_LEVEL = "DEBUG"
    SWEEP_WORKERS = 4


# Testing configuration (serial, deterministic)
class TestingConfig(Config):
    """Testing configuration"""

    SWEEP_WORKERS = None


# Configuration dictionary
config = {
    "development": DevelopmentConfig,
    "testing": TestingConfig,
    "default": Config,
}


def get_config(config_name=None):
    """Get configuration based on environment"""
    config_name = config_name or os.environ.get("GRAPHCODE_ENV", "default")
    return config.get(config_name, Config)
