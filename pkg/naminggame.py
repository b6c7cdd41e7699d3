#!/usr/bin/env python3
"""
naminggame - Main entry point for the command-line tool.
This script provides a direct way to run the simulator from a source checkout.
"""
import sys
from pathlib import Path

# Add the package directory to the Python path
current_dir = Path(__file__).resolve().parent
sys.path.insert(0, str(current_dir))

try:
    from naminggame import main
except ImportError as e:
    print(f"Error: naminggame package not importable: {e}")
    sys.exit(1)

if __name__ == "__main__":
    sys.exit(main())
