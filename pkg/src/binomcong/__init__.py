"""Central binomial congruences, Lucas sequences and an exhaustive checker."""

__version__ = "0.1.0"
