"""
noloopwb - a workbench for bound quiver algebras and no-loop certificates.

Builds finite-dimensional algebras kQ/I from a quiver presentation, computes
projective resolutions, ray categories, penny-farthings and cleaving
diagrams, and searches for alpha-filtrations of finite projective dimension.
"""

__version__ = "1.0.0"
