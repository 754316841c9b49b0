"""Exact-arithmetic toolkit for finite-dimensional Hopf algebras and
Hopf-Galois extensions with central invariants."""

__version__ = "0.1.0"
