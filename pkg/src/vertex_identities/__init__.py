"""Exact rational verification of six-vertex partition functions, symmetric
function expansions and plane-partition generating series."""

__version__ = "0.1.0"
