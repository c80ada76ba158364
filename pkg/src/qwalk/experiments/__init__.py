"""Experiment definitions, reporting and golden-table comparison."""
