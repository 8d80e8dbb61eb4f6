"""Regions on the triangular lattice and the tiling oracle."""
