"""Irreducible representations, Fourier transforms and Cayley-graph spectra for SL_2(Z/p^n Z)."""

from .modarith import PrimePower

__all__ = ["PrimePower"]
