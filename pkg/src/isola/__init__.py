"""Cographs, their maps, and combinatorial isolability objects."""

__version__ = "0.1.0"
