import sys

from cdbg.cli import main

sys.exit(main())
