"""Lozenge tilings of holey hexagons."""
