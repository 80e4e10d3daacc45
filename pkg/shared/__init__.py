"""Shared plumbing for the tautological intersection tools."""

__version__ = "0.1.0"
