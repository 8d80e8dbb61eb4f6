"""Exact determinants, Pfaffians and path matrices."""
