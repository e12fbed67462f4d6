# main.py - Main Entry Point for the graphcode command line
import sys

from cli import main

if __name__ == "__main__":
    sys.exit(main())
