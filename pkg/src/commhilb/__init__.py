"""Hilbert-Poincare series of spaces of commuting elements via Weyl group censuses."""

__version__ = "0.1.0"
