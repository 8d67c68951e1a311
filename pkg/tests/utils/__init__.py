"""Tests for utility modules."""