"""Scenario commands."""
