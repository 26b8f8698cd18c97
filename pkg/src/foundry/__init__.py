"""Foundations of matroids, pasture morphisms, and finite-field representations."""

__version__ = "0.1.0"
