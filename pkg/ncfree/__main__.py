"""Allow running ncfree as: python -m ncfree"""

import sys

from .cli import main

sys.exit(main())
