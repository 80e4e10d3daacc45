"""Test suite for API and data tools."""
