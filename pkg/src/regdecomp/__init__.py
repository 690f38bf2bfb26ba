"""Exact primary decompositions of ideals generated by powers of regular sequences."""
__version__ = "0.1.0"
