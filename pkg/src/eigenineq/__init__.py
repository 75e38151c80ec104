"""Eigenvalue computation and inequality verification toolkit.

Computes spectra of the fixed membrane, free membrane, clamped plate and
buckling problems on balls, rectangles and rasterized planar domains, and
checks the classical isoperimetric and universal eigenvalue inequalities
against them.
"""

__version__ = "0.1.0"
