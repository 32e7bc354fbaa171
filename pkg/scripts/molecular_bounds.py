#!/usr/bin/env python3
"""Analytic qubit bounds for the bundled molecular geometries."""

import sys

from fermap.cli import main as fermap_main

if __name__ == "__main__":
    sys.exit(fermap_main(["bounds"]))
