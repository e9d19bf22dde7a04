#!/usr/bin/env python3
"""
Termination certificate checker entry point.

Usage:
    python scripts/termcert.py certify tests/golden/accept/half.trs tests/golden/accept/half.json
    python scripts/termcert.py orient problem.trs proof.json --step 1
    python scripts/termcert.py search problem.trs --regime plain --carrier nat --grid 0,1,2
    python scripts/termcert.py --config path/to/config.yaml certify problem.trs proof.json
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.frontend.cli import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
