"""Handle numbers of knots via Whitehead graphs of Heegaard diagrams."""

from ._kernels import BACKEND

__version__ = "0.1.0"
