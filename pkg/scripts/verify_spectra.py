#!/usr/bin/env python3
"""Spectral-equivalence oracle: both mappings must be isospectral on the
physical sectors for small lattices and random Hamiltonians."""

import argparse
import sys

from fermap.cli import main as fermap_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--random", type=int, default=20)
    args = parser.parse_args()
    failures = 0
    failures += fermap_main([
        "verify", "--dim", "1", "--sizes", "2",
        "--exponents", "8.75,7.00,5.00,3.00,1.00",
        "--random", str(args.random), "--tolerance", "1e-9",
    ])
    failures += fermap_main([
        "verify", "--dim", "1", "--sizes", "3", "--exponents", "8.75",
        "--ancilla", "--tolerance", "1e-8",
    ])
    print(f"verify_spectra: {'PASS' if failures == 0 else 'FAIL'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
