"""Exact enumeration of unicellular map base structures and the resulting
1/N expansion of transport moment generating functions for chaotic cavities."""

__version__ = "0.1.0"
