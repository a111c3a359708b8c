from itertools import product

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from data.reference_values import GR24_QUANTUM_TABLE
from src.core.littlewood_richardson import lr_coefficient
from src.core.partitions import partition_of_subset, subset_of_partition, subsets
from src.core.quantum import (
    check_unitary_product,
    normalization_lift,
    normalize_unitary_spectrum,
    quantum_lr,
    quantum_product,
    unitary_system,
)
from src.utils.data_models import Partition, SchubertIndex, Spectrum
from src.utils.exceptions import DimensionMismatchError, NormalizationError


def index(shape, p, n):
    return subset_of_partition(Partition(shape), p, n)


def grassmannians(max_cells):
    return [(p, n) for n in range(2, 8) for p in range(1, n) if p * (n - p) <= max_cells]


class TestQuantumProduct:

    def test_projective_line(self):
        point = SchubertIndex.of(2, [2])
        terms = quantum_product(point, point)
        assert [(t.K.elements, t.d, t.coeff) for t in terms] == [((1,), 1, 1)]
        assert quantum_lr(point, point, SchubertIndex.of(2, [1]), 1) == 1

    @pytest.mark.parametrize("pair, expected", sorted(GR24_QUANTUM_TABLE.items()))
    def test_gr24_table(self, pair, expected):
        left, right = (index(shape, 2, 4) for shape in pair)
        terms = {(t.d, t.K, t.coeff) for t in quantum_product(left, right)}
        assert terms == {(d, index(shape, 2, 4), c) for d, shape, c in expected}

    @pytest.mark.parametrize("p, n", grassmannians(4))
    def test_identity_class(self, p, n):
        unit = SchubertIndex(n, tuple(range(1, p + 1)))
        for J in subsets(n, p):
            assert [(t.K, t.d, t.coeff) for t in quantum_product(unit, J)] == [(J, 0, 1)]

    @pytest.mark.parametrize("p, n", grassmannians(6))
    def test_degree_zero_is_classical(self, p, n):
        pool = list(subsets(n, p))
        for I, J, K in product(pool, repeat=3):
            expected = lr_coefficient(partition_of_subset(I), partition_of_subset(J), partition_of_subset(K))
            assert quantum_lr(I, J, K, 0) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("p, n", [(p, n) for p, n in grassmannians(9) if p * (n - p) > 6])
    def test_degree_zero_is_classical_large(self, p, n):
        pool = list(subsets(n, p))
        for I, J, K in product(pool, repeat=3):
            expected = lr_coefficient(partition_of_subset(I), partition_of_subset(J), partition_of_subset(K))
            assert quantum_lr(I, J, K, 0) == expected

    @pytest.mark.parametrize("p, n", grassmannians(6))
    def test_commutative_and_balanced(self, p, n):
        pool = list(subsets(n, p))
        for I, J in product(pool, repeat=2):
            terms = quantum_product(I, J)
            assert terms == quantum_product(J, I)
            for t in terms:
                assert I.weight + J.weight == t.K.weight + n * t.d
                assert t.coeff > 0
            assert [(t.d, t.K.elements) for t in terms] == sorted((t.d, t.K.elements) for t in terms)

    def test_degree_out_of_range(self):
        point = SchubertIndex.of(2, [2])
        assert quantum_lr(point, point, SchubertIndex.of(2, [1]), 2) == 0
        assert quantum_lr(point, point, SchubertIndex.of(2, [1]), 0) == 0

    def test_mismatched_grassmannians(self):
        with pytest.raises(DimensionMismatchError):
            quantum_product(SchubertIndex.of(3, [1]), SchubertIndex.of(4, [1]))


class TestNormalization:

    @pytest.mark.parametrize("angles, expected", [
        ((0, 0), (0, 0)),
        ((0.6, 0.4), (0.4, -0.4)),
        ((1 / 3, -1 / 3, 0), (1 / 3, 0, -1 / 3)),
        ((0.25, 0.75), (0.25, -0.25)),
        ((1.3, -0.3, 2.0), (0.3, 0.0, -0.3)),
    ])
    def test_examples(self, angles, expected):
        result = normalize_unitary_spectrum(angles)
        np.testing.assert_allclose(result.values, expected, atol=1e-12)

    def test_boundary_is_flagged(self):
        spectrum, boundary = normalization_lift([0.5, 0.5])
        np.testing.assert_allclose(spectrum.values, (0.5, -0.5))
        assert boundary
        assert not normalization_lift([0.1, -0.1])[1]

    def test_non_special_unitary(self):
        with pytest.raises(NormalizationError):
            normalize_unitary_spectrum([0.3, 0.3])

    @given(st.lists(st.floats(-3, 3, allow_nan=False), min_size=1, max_size=5))
    def test_normalized_output(self, free):
        angles = free + [-sum(free)]
        spectrum = normalize_unitary_spectrum(angles)
        assert abs(spectrum.total) < 1e-9
        assert spectrum.spread <= 1 + 1e-9
        for value in spectrum.values:
            residues = [(value - a) % 1.0 for a in angles]
            assert any(min(r, 1 - r) < 1e-9 for r in residues)


class TestUnitaryProduct:

    def test_identity(self):
        zero = Spectrum.of(0, 0, 0)
        assert check_unitary_product(zero, zero, zero).feasible

    def test_su2_examples(self):
        quarter = Spectrum.of(0.25, -0.25)
        assert check_unitary_product(quarter, quarter, Spectrum.of(0.5, -0.5)).feasible
        tenth = Spectrum.of(0.1, -0.1)
        verdict = check_unitary_product(tenth, tenth, Spectrum.of(0.4, -0.4))
        assert not verdict.feasible
        assert verdict.witness.degree == 0

    def test_quantum_inequality_can_be_the_witness(self):
        lam = Spectrum.of(0.4, -0.4)
        verdict = check_unitary_product(lam, lam, Spectrum.of(0.3, -0.3))
        assert not verdict.feasible
        assert verdict.witness.degree == 1

    def test_rejects_unnormalized(self):
        with pytest.raises(NormalizationError):
            check_unitary_product(Spectrum.of(0.5, 0), Spectrum.of(0, 0), Spectrum.of(0, 0))
        with pytest.raises(NormalizationError):
            check_unitary_product(Spectrum.of(0.7, -0.7), Spectrum.of(0, 0), Spectrum.of(0, 0))

    @given(st.floats(0, 0.5), st.floats(0, 0.5), st.floats(0, 0.5))
    def test_su2_closed_form(self, a, b, c):
        bounds = [c - abs(a - b), a + b - c, 1 - a - b - c]
        assume(all(abs(x) > 1e-6 for x in bounds))
        verdict = check_unitary_product(Spectrum.of(a, -a), Spectrum.of(b, -b), Spectrum.of(c, -c))
        assert verdict.feasible == all(x > 0 for x in bounds)

    @given(st.floats(0, 0.5), st.floats(0, 0.5), st.floats(0, 0.5))
    def test_swap_symmetry(self, a, b, c):
        u, v, w = Spectrum.of(a, -a), Spectrum.of(b, -b), Spectrum.of(c, -c)
        assert check_unitary_product(u, v, w).feasible == check_unitary_product(v, u, w).feasible

    def test_degree_zero_rows_are_implied(self, rng):
        system = unitary_system(3)
        classical = system.degrees == 0
        for _ in range(200):
            spectra = [normalize_unitary_spectrum(list(x) + [-sum(x)]) for x in rng.uniform(-1, 1, (3, 2))]
            slacks = system.slacks(*spectra)
            if np.any(slacks[classical] < -1e-9):
                assert not check_unitary_product(*spectra).feasible
