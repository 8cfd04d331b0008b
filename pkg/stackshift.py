# -*- coding: utf-8 -*-
"""
Ponto de entrada do stackshift.
Execute: python stackshift.py --help
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
