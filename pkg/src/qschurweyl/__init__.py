"""Exact computations linking finite-dimensional modules of the affine Hecke algebra of GL_r
with modules of quantum affine sl_m."""

__version__ = "0.1.0"
