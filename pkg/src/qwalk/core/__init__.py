"""Spin algebra, coins, walk models and the error hierarchy."""
