"""Tests package for cqs-resolutions."""
