"""Developer task handlers for manage.py."""

import subprocess
import sys
from pathlib import Path
from typing import List

CODE_ROOTS = ("api", "services", "data")
TEST_ROOT = Path("tests")
COVERAGE_THRESHOLD = 90


def run_command(cmd: List[str]) -> int:
    """Run a command and return its exit code."""
    print(f"Running: {' '.join(cmd)}")
    return subprocess.run(cmd).returncode


def missing_test_files() -> List[str]:
    """Code files whose mirrored ``tests/.../test_<name>.py`` does not exist."""
    missing = []
    for root in CODE_ROOTS:
        for path in sorted(Path(root).rglob("*.py")):
            if path.name == "__init__.py" or "__pycache__" in path.parts:
                continue
            test_path = TEST_ROOT / path.parent / f"test_{path.name}"
            if not test_path.exists():
                missing.append(str(test_path))
    return missing


def handle_lint():
    """Handle the lint command, with optional file arguments."""
    targets = sys.argv[2:] or ["."]
    exit_code = run_command(["ruff", "check", *targets])
    if exit_code == 0:
        exit_code = run_command(["mypy", *targets])
    sys.exit(exit_code)


def handle_lint_fix():
    exit_code = run_command(["ruff", "check", "--fix", "."])
    exit_code |= run_command(["ruff", "format", "."])
    sys.exit(exit_code)


def handle_format():
    sys.exit(run_command(["ruff", "format", "."]))


def handle_format_check():
    sys.exit(run_command(["ruff", "format", "--check", "."]))


def handle_test():
    """Run pytest; extra arguments (files, -m slow, -k ...) pass straight through."""
    sys.exit(run_command([sys.executable, "-m", "pytest", *sys.argv[2:]]))


def handle_test_coverage():
    """Check the test mirror, then run the suite under coverage."""
    missing = missing_test_files()
    if missing:
        print("❌ Test file mapping validation failed:")
        for path in missing:
            print(f"   missing {path}")
        sys.exit(1)
    print("✅ Test file mapping validation passed.")
    cov_args = [f"--cov={root}" for root in CODE_ROOTS]
    sys.exit(
        run_command(
            [
                sys.executable,
                "-m",
                "pytest",
                *cov_args,
                "--cov-report=term-missing",
                f"--cov-fail-under={COVERAGE_THRESHOLD}",
                *sys.argv[2:],
            ]
        )
    )
