#!/usr/bin/env python3
"""
Graded-logic toolkit

Fuzzy sets with exact piecewise-linear algebra, the Sugeno negation family,
quantified classical laws, n-valued Lukasiewicz logic and a propositional
formula language.

Usage:
    python main.py [--verbose] COMMAND ACTION [options]

Run ``python main.py --help`` for the command list.
"""

import sys

from src.cli import run


def main() -> int:
    """Main entry point."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
