"""Topological vertex partition functions of toric Calabi-Yau threefolds."""

__version__ = "0.1.0"
