"""Unit tests for helix_lab."""
