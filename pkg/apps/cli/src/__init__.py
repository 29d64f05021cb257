"""Command-line front end for the amt kernel."""

__version__ = "0.1.0"
