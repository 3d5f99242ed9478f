"""Euclidean t-designs on concentric spheres: verification, bounds, and
exact exclusion certificates for tight 9-designs on two spheres."""

__version__ = "0.1.0"
