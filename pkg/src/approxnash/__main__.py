import sys

from approxnash.cli import main

sys.exit(main())
