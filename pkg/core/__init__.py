"""Core module for report models, errors and configuration"""
from .models import (
    ProtocolReport, GraphSummary, Viability, ExitCode, Command, TOOL_VERSION, RNG_ALGORITHM
)
from .config import get_config, Config, DevelopmentConfig, TestingConfig
from .errors import (
    GraphCodeError, GF2Error, DimensionError, NonSquareError, SingularError,
    GraphError, InvalidVertexError, ParseError, ParseReason,
    OracleError, SizeLimitError, SiteError, NotViableError
)

__all__ = [
    'ProtocolReport', 'GraphSummary', 'Viability', 'ExitCode', 'Command', 'TOOL_VERSION', 'RNG_ALGORITHM',
    'get_config', 'Config', 'DevelopmentConfig', 'TestingConfig',
    'GraphCodeError', 'GF2Error', 'DimensionError', 'NonSquareError', 'SingularError',
    'GraphError', 'InvalidVertexError', 'ParseError', 'ParseReason',
    'OracleError', 'SizeLimitError', 'SiteError', 'NotViableError'
]
