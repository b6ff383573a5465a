"""Module entry point: ``python -m admissible_sl2`` == ``admsl2``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
