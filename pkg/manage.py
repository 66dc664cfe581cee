#!/usr/bin/env python
"""Project task runner: developer tasks first, everything else goes to the CLI."""

import sys

from commands import (
    handle_format,
    handle_format_check,
    handle_lint,
    handle_lint_fix,
    handle_test,
    handle_test_coverage,
)

TASKS = {
    "lint": handle_lint,
    "lint:fix": handle_lint_fix,
    "format": handle_format,
    "format:check": handle_format_check,
    "test": handle_test,
    "test:coverage": handle_test_coverage,
}


def main():
    if len(sys.argv) >= 2 and sys.argv[1] in TASKS:
        TASKS[sys.argv[1]]()
        return

    from api.cli import main as cli_main

    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
