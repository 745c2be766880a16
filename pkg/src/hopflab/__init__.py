"""Exact computer algebra for finitely presented Hopf algebras, quantum
doubles, bicrossproducts, twists, R-matrices and Lie bialgebras."""

__version__ = "0.1.0"
