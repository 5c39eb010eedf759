"""Topological symmetry groups of embeddings of the Petersen graph."""

__version__ = "0.1.0"
