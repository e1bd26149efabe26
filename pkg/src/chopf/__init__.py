"""Exact-arithmetic library for colored combinatorial Hopf algebras."""

__version__ = "0.1.0"
