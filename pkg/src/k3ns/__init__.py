"""Exact classification engine for K3 surfaces with a non-symplectic
cyclic automorphism group of order 38, 44, 48, 50, 54, 60 or 66."""

__version__ = "0.1.0"
