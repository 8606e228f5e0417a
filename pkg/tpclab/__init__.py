"""tpclab: total proper connection colorings, checks and exact values for small graphs."""

__version__ = "0.1.0"
