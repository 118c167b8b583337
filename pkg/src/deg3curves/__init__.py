"""Degree-three curves in C^(2) from A4, S4 and A5 triangle actions."""
__version__ = "0.1.0"
