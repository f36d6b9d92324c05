"""Exact-arithmetic decision procedures for restricting cohomologically
induced modules along reductive symmetric pairs."""

__version__ = "0.1.0"
