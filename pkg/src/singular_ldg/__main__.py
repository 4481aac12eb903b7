import sys

from singular_ldg.entrypoints.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
