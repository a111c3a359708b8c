"""Source code package for the horn-spectra toolkit."""
