"""Exact arithmetic in the Clifford algebra R_{0,m}."""
