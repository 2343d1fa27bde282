"""Floating-point evaluation and finite-difference checks."""
