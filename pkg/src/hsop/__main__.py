import sys

from hsop.cli import main

sys.exit(main())
