"""
Runs one platjones evaluation from the command line.
Example:
    python scripts/platjones_run.py --mode exact --k 3 --braid trefoil
"""
import sys

from platjones.cli import main

if __name__ == '__main__':
    sys.exit(main())
