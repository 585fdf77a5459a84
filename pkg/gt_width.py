#!/usr/bin/env python
"""CLI script for Gelfand-Tsetlin polytope and Gromov width computations."""

import sys

from gt_gromov_width.cli import main

if __name__ == "__main__":
    sys.exit(main())
