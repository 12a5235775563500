"""
kflat - exact algebra for families of divisors and first-order deformations
"""

__version__ = "1.0.0"
__author__ = "kflat developers"

# Import core modules
from . import config
from . import core
from . import utils

__all__ = [
    "config",
    "core",
    "utils",
]
