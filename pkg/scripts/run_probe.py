#!/usr/bin/env python3
"""Worst-case scaling probe on complete interaction graphs.

Prints per-size weights for both mappings plus the max-weight linear fit and
the total-weight log-log slopes.  Larger --modes values sharpen the encoded
slope estimate (it approaches 5 from above as the register outgrows the
small-size saturation at M=4)."""

import argparse
import sys

from fermap.cli import main as fermap_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--modes", default="4,6,8,10,12,14")
    args = parser.parse_args()
    return fermap_main(["probe", "--modes", args.modes])


if __name__ == "__main__":
    sys.exit(main())
