"""Exact pseudo MV-algebras, their unital l-group carriers, and square roots."""

__version__ = "0.1.0"
