"""Allow running the command line via ``python -m cyclepat``."""

import sys

from .cli import main

sys.exit(main())
