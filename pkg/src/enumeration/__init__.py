"""Coefficient families, enumeration formulas and LU factors."""
