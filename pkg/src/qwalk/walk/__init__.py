"""Quantum and classical walk engines."""
