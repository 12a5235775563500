#!/usr/bin/env python3
"""
kflat command line entry point
"""

import logging
import sys
from typing import List, Optional

from src.cli import render, run
from src.config import config

# Configure logging for the command line
logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    report = run(argv)
    output = render(report, as_json="--json" in argv)
    if output:
        stream = sys.stderr if report.status == "error" and "--json" not in argv else sys.stdout
        print(output, file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
