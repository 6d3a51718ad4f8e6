import sys

from sddlab.cli import main

sys.exit(main())
