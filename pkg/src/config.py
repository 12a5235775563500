"""
Configuration Management
Settings for the kflat algebra kernel, command line and service
"""

import os
import platform
import sys
from typing import Dict, Any
from dataclasses import dataclass

# Load environment variables from .env file
try:
    from dotenv import load_dotenv  # type: ignore
    load_dotenv()
except ImportError:
    pass  # dotenv not available


@dataclass
class KFlatConfig:
    """Configuration for kflat computations"""

    # Defaults for the command line
    DEFAULT_FIELD: str = os.getenv("KFLAT_FIELD", "Q")
    DEFAULT_ORDER: str = os.getenv("KFLAT_ORDER", "grevlex")
    DEFAULT_SEED: int = int(os.getenv("KFLAT_SEED", "0"))

    # Random sampling
    SAMPLE_BOUND: int = int(os.getenv("KFLAT_SAMPLE_BOUND", "7"))
    SAMPLE_TRIALS: int = int(os.getenv("KFLAT_SAMPLE_TRIALS", "200"))
    SAMPLE_BATCH: int = int(os.getenv("KFLAT_SAMPLE_BATCH", "10"))
    SAMPLE_WORKERS: int = int(os.getenv("KFLAT_SAMPLE_WORKERS", "1"))
    MAX_REDRAWS: int = int(os.getenv("KFLAT_MAX_REDRAWS", "50"))
    KFLAT_DRAWS: int = int(os.getenv("KFLAT_KFLAT_DRAWS", "25"))

    # Length computations
    TORSION_MAX_DEGREE: int = int(os.getenv("KFLAT_TORSION_MAX_DEGREE", "64"))

    # Hard limits
    MAX_SUBSET_SIZE: int = 24
    MAX_MATRIX_SIZE: int = 12

    # Logging
    LOG_LEVEL: str = os.getenv("KFLAT_LOG_LEVEL", "WARNING")

    # HTTP service
    HOST: str = os.getenv("KFLAT_HOST", "0.0.0.0")
    PORT: int = int(os.getenv("KFLAT_PORT", "8000"))


# Global configuration instance
config = KFlatConfig()


def get_error_message(error_type: str, details: str = "") -> str:
    """Get error message"""
    error_messages = {
        "field_mismatch": "The operands live over different fields or variable lists.",
        "unknown_variable": "An expression uses a variable that is not declared with --vars.",
        "zero_input": "The operation needs a nonzero input.",
        "precondition": "A precondition of the operation does not hold.",
        "field_too_small": "The coefficient field is too small for this operation; an override is needed.",
        "characteristic": "This operation is only available in characteristic 0.",
        "infinite_length": f"The length did not stabilize up to degree {config.TORSION_MAX_DEGREE}; the module is probably not of finite length.",
        "malformed_input": "The input does not have the required shape.",
        "parse_error": "The expression could not be parsed.",
        "invariant_violation": "An internal cross-check failed.",
        "usage": "The command line could not be understood.",
    }

    base_message = error_messages.get(error_type, "Something unexpected happened during the computation.")
    return f"{base_message}\n{details}" if details else base_message


def validate_environment() -> Dict[str, bool]:
    """Validate environment setup"""
    validation = {
        "field": config.DEFAULT_FIELD.upper() in ("Q", "QQ") or config.DEFAULT_FIELD.lower().startswith("fp:"),
        "order": config.DEFAULT_ORDER.lower() in ("lex", "grevlex") or config.DEFAULT_ORDER.lower().startswith("elim:"),
        "sample_bound": config.SAMPLE_BOUND >= 1,
        "sample_batch": config.SAMPLE_BATCH >= 1,
        "sample_workers": config.SAMPLE_WORKERS >= 1,
        "torsion_max_degree": config.TORSION_MAX_DEGREE >= 4,
    }
    return validation


def get_system_info() -> Dict[str, Any]:
    """Get system information"""
    from . import __version__

    return {
        "version": __version__,
        "python": sys.version.split()[0],
        "platform": platform.platform(),
        "config_status": validate_environment(),
        "defaults": {
            "field": config.DEFAULT_FIELD,
            "order": config.DEFAULT_ORDER,
            "seed": config.DEFAULT_SEED,
            "sample_bound": config.SAMPLE_BOUND,
            "sample_batch": config.SAMPLE_BATCH,
            "torsion_max_degree": config.TORSION_MAX_DEGREE,
        },
    }
