"""Graph cohomology invariants of plane-embedded simple graphs."""

__version__ = "0.1.0"
