"""Output formatters for scenario results."""
