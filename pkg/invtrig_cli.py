#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: invtrig_cli.py
Date: 2026-10-18
Version: 1.0
Description:
    Command line entry point, see invtrig_series/cli_utility.py.
    Example: python invtrig_cli.py verify all --max 12 --format json

License:
"""

""" Imports """
# Import python libraries
import sys

# Import local modules
from invtrig_series import cli_utility


""" Main """

if __name__ == '__main__':
    sys.exit(cli_utility.main())
