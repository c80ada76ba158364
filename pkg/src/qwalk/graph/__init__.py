"""Property graph storage, builders and JSON interchange."""
