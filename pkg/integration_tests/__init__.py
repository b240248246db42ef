"""Acceptance tests running the suites end to end."""
