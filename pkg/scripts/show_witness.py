"""Print a pair of enriched simplices on which pi fails to compose strictly."""

import sys

from crossed_coherence.cli import main

if __name__ == "__main__":
    sys.exit(main(["witness"] + sys.argv[1:]))
