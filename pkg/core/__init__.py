"""Finite graph/tree machinery: decompositions, minors, colorings, connectivity."""
