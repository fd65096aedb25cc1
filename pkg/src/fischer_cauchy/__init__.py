"""Exact Fischer-norm machinery and a series solver for mixed Cauchy problems ``L(P q) = f``."""

__version__ = "0.1.0"
