import sys

from graphlie.cli import main

sys.exit(main())
