import sys

from tachyon.cli import main

sys.exit(main())
