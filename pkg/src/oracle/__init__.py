"""Numerical oracle: random matrices with prescribed spectra and the Monte-Carlo harness."""
