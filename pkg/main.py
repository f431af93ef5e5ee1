"""
Run the skewblocks command line from a source checkout:

    python main.py count --patterns 132 --n-max 10
    python main.py verify --lemma 132 --n-max 8
"""

import sys

from skewblocks.cli import main

if __name__ == "__main__":
    sys.exit(main())
