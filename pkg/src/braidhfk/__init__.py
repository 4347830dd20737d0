"""Knot Floer homology of braid closures via a cube of resolutions over Q(t)."""

__version__ = "0.1.0"
