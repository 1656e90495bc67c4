import sys

from corank.cli import main

sys.exit(main())
