"""Computations in the mod-2 (co)homology of the symmetric groups as a Hopf ring."""

__version__ = "0.1.0"
