"""Planar graph four-coloring through Tait edge colorings of cubic duals."""

__version__ = "0.1.0"
