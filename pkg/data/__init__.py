"""Data package holding static reference tables."""
