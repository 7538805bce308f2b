#!/usr/bin/env python3
"""
betti-bounds
Run script for the command line without installing the package
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.absolute()))

from betti_bounds.cli import run  # noqa: E402

if __name__ == '__main__':
    run()
