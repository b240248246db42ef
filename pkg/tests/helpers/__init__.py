"""Shared fixtures, oracles and assertion helpers for the test suites."""
