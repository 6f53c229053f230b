"""
Test runner script for the ncx toolkit.

Wraps pytest with suite selection: unit tests, randomized property tests,
integration tests (CLI and HTTP API), coverage and parallel runs.
"""
import argparse
import os
import subprocess
import sys
from pathlib import Path


def run_command(command):
    """Run a command and report whether it succeeded."""
    try:
        result = subprocess.run(command, shell=True)
        return result.returncode == 0
    except OSError as e:
        print(f"Error running command '{command}': {e}")
        return False


def run_suite(label, marker=None, pattern=None, verbose=False, parallel=False, extra=""):
    """Run one pytest selection."""
    print(f"Running {label}...")

    cmd = "pytest tests/"
    if marker:
        cmd += f' -m "{marker}"'
    if pattern:
        cmd += f" -k {pattern}"
    if verbose:
        cmd += " -v"
    if parallel:
        cmd += " -n auto"
    if extra:
        cmd += f" {extra}"

    success = run_command(cmd)
    print(f"✓ {label} passed!" if success else f"✗ {label} failed")
    return success


def generate_coverage_report(parallel=False):
    """Generate test coverage report."""
    success = run_suite("coverage run", parallel=parallel,
                        extra="--cov=ncx --cov-report=html --cov-report=term-missing")
    coverage_file = Path("htmlcov/index.html")
    if success and coverage_file.exists():
        print(f"📂 Coverage report path: {coverage_file.absolute()}")
    return success


def lint_code():
    """Run code linting."""
    print("Running code linting...")
    success = run_command("flake8 ncx/ tests/ app.py --max-line-length=120 --ignore=E501,W503")
    print("✓ Code linting passed!" if success else "⚠️  Linting issues found")
    return success


def main():
    """Main test runner function."""
    parser = argparse.ArgumentParser(description="ncx Test Runner")
    parser.add_argument("--unit", action="store_true", help="Run unit tests only")
    parser.add_argument("--properties", action="store_true", help="Run randomized property tests only")
    parser.add_argument("--integration", action="store_true", help="Run CLI and API tests only")
    parser.add_argument("--fast", action="store_true", help="Run everything except slow tests")
    parser.add_argument("--coverage", action="store_true", help="Generate coverage report")
    parser.add_argument("--parallel", action="store_true", help="Distribute tests with pytest-xdist")
    parser.add_argument("--lint", action="store_true", help="Run code linting")
    parser.add_argument("--pattern", type=str, help="Run tests matching pattern")
    parser.add_argument("--verbose", "-v", action="store_true", help="Verbose output")

    args = parser.parse_args()

    os.chdir(Path(__file__).parent)

    print("🧪 ncx Test Runner")
    print("=" * 50)

    if args.unit:
        success = run_suite("unit tests", "unit", args.pattern, args.verbose, args.parallel)
    elif args.properties:
        success = run_suite("property tests", "properties", args.pattern, args.verbose, args.parallel)
    elif args.integration:
        success = run_suite("integration tests", "integration", args.pattern, args.verbose, args.parallel)
    elif args.fast:
        success = run_suite("fast tests", "not slow", args.pattern, args.verbose, args.parallel)
    elif args.coverage:
        success = generate_coverage_report(args.parallel)
    elif args.lint:
        success = lint_code()
    else:
        success = run_suite("all tests", None, args.pattern, args.verbose, args.parallel)

    print("\n" + "=" * 50)

    if success:
        print("🎉 All tests completed successfully!")
        print("\n📋 Available test commands:")
        print("  python run_tests.py --unit         # Unit tests")
        print("  python run_tests.py --properties   # Randomized properties")
        print("  python run_tests.py --coverage     # Coverage report")
        print("  python run_tests.py --parallel     # All tests on every core")
    else:
        print("❌ Some tests failed!")
        sys.exit(1)


if __name__ == "__main__":
    main()
