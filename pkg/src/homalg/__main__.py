import sys

from homalg.cli import main

sys.exit(main())
