"""Exact crystal and perfect basis computations for quantum Borcherds-Bozec algebras."""

__version__ = "0.1.0"
