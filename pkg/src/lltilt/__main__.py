import sys

from lltilt.cli import main

sys.exit(main())
