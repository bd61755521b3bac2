#!/usr/bin/env python3
"""Run the full C(8,4) pipeline and print every intermediate artifact.

Equivalent to `momentangle counterexample`; pass --json for the
machine-readable report.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from momentangle.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main([*sys.argv[1:], "counterexample"]))
