"""Excited diagrams, pleasant diagrams, Hillman-Grassl, and skew hook-length formulas."""

from .shapes import Cell, Partition, SkewShape

__all__ = ["Cell", "Partition", "SkewShape"]
