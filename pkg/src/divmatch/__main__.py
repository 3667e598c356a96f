import sys

from divmatch.cli import main


sys.exit(main())
