"""Utilities package for data models, errors, input parsing and report output."""
