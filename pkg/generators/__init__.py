"""Homogeneous monogenic and biregular polynomial generators."""
