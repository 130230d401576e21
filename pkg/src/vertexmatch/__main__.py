import sys

from vertexmatch.cli import main

sys.exit(main())
