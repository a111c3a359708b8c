"""Configuration package for horn-spectra."""
