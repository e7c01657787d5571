"""Test suite for detrep."""
