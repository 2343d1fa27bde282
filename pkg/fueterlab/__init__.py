"""Project package of the biregular Fueter engine."""
