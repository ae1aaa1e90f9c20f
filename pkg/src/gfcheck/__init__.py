"""Coefficient criteria for starlike, convex, close-to-convex and prestarlike
partial sums, generalized Cesaro means, and numerical disk verifiers."""

__version__ = "0.1.0"
