"""Frequency-spin set operations."""
