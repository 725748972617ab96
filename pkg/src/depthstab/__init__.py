"""Depth functions of powers of monomial ideals, with a fast path for cover
ideals of balanced hypergraphs."""

__version__ = "0.1.0"
