"""
Run script for the Fujiki orbifold toolkit
"""

import os
import sys
from dotenv import load_dotenv

from cli import main as cli_main


def load_environment():
    """Load .env when present; every setting has a default"""
    if os.path.exists('.env'):
        load_dotenv()
    else:
        print("No .env file found, using defaults (run setup.py to create one).", file=sys.stderr)


def main():
    """Forward the command line to the CLI, defaulting to the reference table check"""
    load_environment()
    argv = sys.argv[1:] or ["table", "--golden"]
    try:
        return cli_main(argv)
    except KeyboardInterrupt:
        print("\nStopped.", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
