"""Exact hyperdeterminants of Hankel tensors and related identities."""

__version__ = "0.1.0"
