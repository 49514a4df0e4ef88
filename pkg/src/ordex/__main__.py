import sys

from ordex.cli import main

sys.exit(main())
