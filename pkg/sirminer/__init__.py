"""Optimal sub-interval relationship mining for pairs of time series."""

__version__ = "1.0.0"
