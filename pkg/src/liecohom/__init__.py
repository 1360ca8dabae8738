"""Cohomology rings of compact simply-connected Lie groups via Koszul models."""

__version__ = "0.1.0"
