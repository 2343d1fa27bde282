"""The biregular Fueter map and its certification."""
