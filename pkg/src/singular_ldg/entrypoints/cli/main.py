import sys

from singular_ldg.entrypoints.cli.dispatch import dispatch


def main() -> int:
    """Run the CLI on the process arguments.

    Returns:
        Process exit code.
    """
    return dispatch(sys.argv[1:])
