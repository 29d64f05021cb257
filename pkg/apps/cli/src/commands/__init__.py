"""Subcommand implementations; each returns a ``Report``."""
