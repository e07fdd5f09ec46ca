"""Reliable state-feedback synthesis and verification for uncertain 2D
discrete switched systems with state delays (Roesser form)."""

__version__ = "0.1.0"
