"""
Reference tables for cross-checking the deciders.

Partitions are written as tuples; the Gr(2,4) table lists every quantum
product of two Schubert classes as (degree, partition, coefficient) terms.
"""

# Number of Horn triples (I, J, K) over all ranks 1 ≤ p < n
HORN_TRIPLE_COUNTS = {
    2: 3,
    3: 12,
    4: 41,
}

# Small quantum cohomology of the Grassmannian of 2-planes in C^4
GR24_QUANTUM_TABLE = {
    ((1,), (1,)): [(0, (1, 1), 1), (0, (2,), 1)],
    ((1,), (2,)): [(0, (2, 1), 1)],
    ((1,), (1, 1)): [(0, (2, 1), 1)],
    ((1,), (2, 1)): [(0, (2, 2), 1), (1, (), 1)],
    ((1,), (2, 2)): [(1, (1,), 1)],
    ((2,), (2,)): [(0, (2, 2), 1)],
    ((1, 1), (1, 1)): [(0, (2, 2), 1)],
    ((2,), (1, 1)): [(1, (), 1)],
    ((2,), (2, 1)): [(1, (1,), 1)],
    ((1, 1), (2, 1)): [(1, (1,), 1)],
    ((2,), (2, 2)): [(1, (1, 1), 1)],
    ((1, 1), (2, 2)): [(1, (2,), 1)],
    ((2, 1), (2, 1)): [(1, (1, 1), 1), (1, (2,), 1)],
    ((2, 1), (2, 2)): [(1, (2, 1), 1)],
    ((2, 2), (2, 2)): [(2, (), 1)],
}

# Classical Littlewood-Richardson values
LR_REFERENCE = [
    ((1,), (1,), (2,), 1),
    ((1,), (1,), (1, 1), 1),
    ((2, 1), (2, 1), (3, 2, 1), 2),
    ((2, 1), (2, 1), (4, 2), 1),
    ((2, 1), (2, 1), (2, 2, 2), 1),
    ((2,), (2,), (3, 1), 1),
    ((2,), (2,), (2, 1, 1), 0),
]
