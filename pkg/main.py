#!/usr/bin/env python3
"""
Main entry point for the permsys CLI.
Permutation checks and classifier sweeps for polynomial systems over small finite fields.
"""

import sys
from pathlib import Path

# Add project root to path so the src package resolves
sys.path.append(str(Path(__file__).parent))

from src.cli.main import cli

if __name__ == "__main__":
    cli()
