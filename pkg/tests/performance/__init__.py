"""Timing checks for the search engines."""
