"""Tropicalization of rings and modules over idempotent semirings."""

__version__ = "0.1.0"
