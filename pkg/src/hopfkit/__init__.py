"""Exact structure-constant engine for small Hopf algebras and a coradical census."""
__version__ = "0.1.0"
