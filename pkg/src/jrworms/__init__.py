"""Exact tools for the golden-mean Z^2-rotation and its Jeandel-Rao worms."""

__version__ = "0.1.0"
