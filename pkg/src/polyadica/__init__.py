"""Polyadic (n-ary) hypercomplex algebras with exact verification."""

__version__ = "0.1.0"
