"""Exact combinatorics: partitions, LR coefficients, Horn systems and quantum Schubert calculus."""
