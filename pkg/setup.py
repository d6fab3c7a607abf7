"""
Setup script for the Fujiki orbifold toolkit
"""

import os
import sys
import subprocess
from pathlib import Path
from dotenv import load_dotenv

SETTINGS_VARS = [
    'FUJIKI_CATALOG', 'FUJIKI_MAX_WORKERS', 'FUJIKI_CACHE_ENABLED', 'FUJIKI_CACHE_DIR',
    'FUJIKI_CACHE_TTL', 'FUJIKI_LOG_LEVEL', 'FUJIKI_LOG_FILE',
]


def check_environment():
    """Report which settings come from the environment and validate the numeric ones"""
    print("Checking environment variables...")

    unset = [var for var in SETTINGS_VARS if not os.getenv(var)]
    if unset:
        print("Using defaults for:")
        for var in unset:
            print(f"   - {var}")

    for var in ('FUJIKI_MAX_WORKERS', 'FUJIKI_CACHE_TTL'):
        value = os.getenv(var)
        if value and not value.isdigit():
            print(f"{var} must be a positive integer, got {value!r}")
            return False

    catalog = os.getenv('FUJIKI_CATALOG')
    if catalog and not Path(catalog).exists():
        print(f"FUJIKI_CATALOG points to a missing file: {catalog}")
        return False

    print("Environment looks good!")
    return True


def create_env_file():
    """Create .env from .env.example if it doesn't exist"""
    env_file = Path('.env')
    env_example = Path('.env.example')

    if not env_file.exists() and env_example.exists():
        print("Creating .env file from template...")
        env_file.write_text(env_example.read_text())
        print("Created .env file.")
    elif not env_file.exists():
        print("No .env file found and no template available.")
        return False

    return True


def install_dependencies():
    """Install required dependencies"""
    print("Installing dependencies...")

    try:
        subprocess.check_call([sys.executable, "-m", "pip", "install", "-r", "requirements.txt"])
        print("Dependencies installed successfully!")
        return True
    except subprocess.CalledProcessError as e:
        print(f"Failed to install dependencies: {e}")
        return False


def main():
    """Main setup function"""
    print("Fujiki Orbifold Toolkit Setup")
    print("=" * 40)

    if not create_env_file():
        return

    load_dotenv()

    if not install_dependencies():
        return

    if not check_environment():
        print("\nPlease fix the settings in .env and run again.")
        return

    print("\nSetup completed successfully!")
    print("\nTo reproduce the orbifold table:")
    print("  python run.py table --golden")


if __name__ == "__main__":
    main()
