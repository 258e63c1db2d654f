"""Exact counts of dominating and isolate dominating sets of small graphs."""

__version__ = "0.1.0"
