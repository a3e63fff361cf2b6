"""Exact computation of weights, characters and weight hulls of highest
weight modules over complex semisimple Lie algebras."""

__version__ = "0.1.0"
