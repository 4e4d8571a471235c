import sys

from gibbsmix.cli import main

sys.exit(main())
