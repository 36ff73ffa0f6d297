"""Length functions: exact values, fast paths, and the sandwich bounds."""

import pytest

from conftest import random_word
from garsidekit.artin import artin_structure
from garsidekit.bkl import bkl_structure
from garsidekit.core import greedy_nf, rational_nf
from garsidekit.errors import NegativeLetter, StructureMismatch
from garsidekit.lengths import (
    LengthMetric,
    alpha,
    bounds_report,
    cross_rational_bkl,
    greedy_length,
    metric_length,
    positive_length,
    rational_length,
)
from garsidekit.oracle import enumerate_ball
from garsidekit.syntax import parse_word


@pytest.fixture
def b3():
    return artin_structure(3)


class TestPositiveLength:
    def test_examples(self, b3):
        assert positive_length(b3.word()) == 0
        assert positive_length(artin_structure(4).delta) == 6
        assert positive_length(bkl_structure(4).delta) == 3

    def test_negative_letter_rejected(self, b3):
        with pytest.raises(NegativeLetter):
            positive_length(parse_word("s1 s2^-1", b3))


class TestGreedyLength:
    def test_empty(self, b3):
        assert greedy_length(b3.word()) == 0

    def test_single_inverse_atom(self, b3):
        assert greedy_length(parse_word("s1^-1", b3)) == 5

    def test_tightness_witness(self, b3):
        # l_G of a^-m meets the worst-case factor 2*l(delta)-1 = 5.
        for m in range(1, 6):
            w = parse_word(" ".join(["s1^-1"] * m), b3)
            assert greedy_length(w) == 5 * m

    def test_positive_words(self, b3, rng):
        for _ in range(20):
            length = rng.randrange(0, 15)
            w = b3.word([(rng.randrange(2), 1) for _ in range(length)])
            assert greedy_length(w) == length == rational_length(w)


class TestRationalLength:
    def test_inverse_positive(self, b3):
        assert rational_length(parse_word("s1^-1", b3)) == 1

    def test_square_commutator_values(self, b3):
        assert rational_length(parse_word("s2 s2 s1^-1 s1^-1", b3)) == 8

    @pytest.mark.parametrize("make", [artin_structure, bkl_structure])
    def test_fast_path_equals_direct_sum(self, make, rng):
        # The delta-removal shortcut must equal summing the rational form.
        for n in (3, 4, 6):
            structure = make(n)
            for _ in range(334):
                w = random_word(rng, structure, 25)
                direct = rational_nf(greedy_nf(w)).atom_length()
                assert rational_length(w) == direct

    @pytest.mark.parametrize("make", [artin_structure, bkl_structure])
    def test_symmetric_under_inverse(self, make, rng):
        structure = make(4)
        for _ in range(80):
            w = random_word(rng, structure, 20)
            assert rational_length(w) == rational_length(w.inverse())


class TestCrossLength:
    def test_single_atom(self, b3):
        assert cross_rational_bkl(parse_word("s1", b3)) == 1
        assert cross_rational_bkl(parse_word("s2", b3)) == 1

    def test_bkl_delta_word(self, b3):
        # An Artin word for the band delta is a positive band element.
        from garsidekit.bkl import bkl_structure, bkl_to_artin

        delta_word = bkl_to_artin(bkl_structure(3).delta.atom_word())
        assert cross_rational_bkl(delta_word) == 2

    def test_requires_artin(self):
        with pytest.raises(StructureMismatch):
            cross_rational_bkl(bkl_structure(3).word())

    def test_metric_length_dispatch(self, b3):
        w = parse_word("s2 s2 s1^-1 s1^-1", b3)
        assert metric_length(w, LengthMetric.GREEDY_ARTIN) == 12
        assert metric_length(w, LengthMetric.RATIONAL_ARTIN) == 8
        assert metric_length(w, LengthMetric.RATIONAL_BKL) == 4
        band = parse_word("a(3,1)", bkl_structure(3))
        assert metric_length(band, LengthMetric.RATIONAL_BKL) == 1
        assert metric_length(band, LengthMetric.RATIONAL_ARTIN) == 3


class TestAlpha:
    def test_values(self):
        assert alpha(2) == 1
        assert alpha(3) == 3

    def test_bound(self):
        for n in range(2, 9):
            assert alpha(n) <= 2 * n - 3 or n == 2


class TestBoundsReport:
    def test_positive_collapse(self, b3):
        w = parse_word("s1 s2 s2 s1", b3)
        report = bounds_report(w, oracle_len=4)
        assert report.ell_G == report.ell_R == 4
        assert report.violations == ()

    def test_worked_example(self, b3):
        w = parse_word("s2 s2 s1^-1 s1^-1", b3)
        report = bounds_report(w, oracle_len=4)
        assert report.ell_R == 8 == (b3.delta_atom_length - 1) * 4
        assert report.violations == ()

    def test_random_with_oracle(self, rng):
        structure = artin_structure(3)
        ball = enumerate_ball(structure, 8)
        for _ in range(150):
            w = random_word(rng, structure, 8)
            dist = ball.lookup(w)
            assert dist is not None
            report = bounds_report(w, oracle_len=dist)
            assert report.violations == (), (w, report)

    @pytest.mark.parametrize("n,radius", [(3, 10), (4, 7)])
    def test_sandwich_on_full_ball(self, n, radius):
        # Every element of the guarded ball satisfies the basic sandwich.
        from garsidekit import kernels

        structure = artin_structure(n)
        ld = structure.delta_atom_length
        ball = enumerate_ball(structure, radius)
        for (k, f), dist in ball.raw_items():
            greedy, rational = kernels.nf_lengths(structure.kind_code, n, k, f)
            assert dist <= rational <= greedy <= (2 * ld - 1) * dist
            assert rational <= (ld - 1) * dist
