"""Clifford-valued polynomials in two paravector variables."""
