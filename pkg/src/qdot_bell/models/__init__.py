"""Data models for parameters, states and run configuration."""
