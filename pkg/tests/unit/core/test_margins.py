"""
测试边际数据结构
"""
from fractions import Fraction

import pytest

from polyvol.core.errors import InvalidMarginsError, UnbalancedMarginsError
from polyvol.core.margins import GeneralMargins, MarginSpec


class TestMarginSpec:
    """常数边际"""

    def test_lambda_is_exact(self):
        spec = MarginSpec(2, 3, 3, 2)
        assert spec.lam == Fraction(1)
        assert MarginSpec(4, 3, 6, 2).lam == Fraction(1, 2)
        assert spec.total == 6

    def test_unbalanced_rejected(self):
        with pytest.raises(UnbalancedMarginsError, match="unbalanced margins"):
            MarginSpec(2, 3, 2, 4)

    def test_unbalanced_is_value_error(self):
        with pytest.raises(ValueError):
            MarginSpec(3, 1, 2, 1)

    @pytest.mark.parametrize("m, s, n, t", [
        (0, 0, 1, 0),
        (1, 0, 0, 0),
        (1, -1, 1, -1),
    ])
    def test_invalid_dimensions(self, m, s, n, t):
        with pytest.raises(InvalidMarginsError):
            MarginSpec(m, s, n, t)

    def test_non_integer_rejected(self):
        with pytest.raises(InvalidMarginsError):
            MarginSpec(2, 1.5, 2, 1.5)

    def test_canonical_orientation(self):
        spec = MarginSpec(3, 2, 2, 3)
        assert spec.canonical() == MarginSpec(2, 3, 3, 2)
        assert spec.transpose().canonical() == spec.canonical()
        assert MarginSpec(3, 2, 3, 2).canonical() == MarginSpec(3, 2, 3, 2)

    def test_to_general(self):
        general = MarginSpec(2, 3, 3, 2).to_general()
        assert general.row_sums == (3, 3)
        assert general.col_sums == (2, 2, 2)

    def test_for_dilation(self):
        assert MarginSpec.for_dilation(2, 3, 6) == MarginSpec(2, 6, 3, 4)
        with pytest.raises(InvalidMarginsError):
            MarginSpec.for_dilation(2, 4, 1)


class TestGeneralMargins:
    """任意边际"""

    def test_basic_properties(self):
        margins = GeneralMargins((2, 1), (1, 1, 1))
        assert (margins.m, margins.n, margins.total) == (2, 3, 3)
        assert margins.transpose() == GeneralMargins((1, 1, 1), (2, 1))

    def test_unbalanced(self):
        with pytest.raises(UnbalancedMarginsError, match="unbalanced margins"):
            GeneralMargins((2, 1), (1, 1))

    def test_empty_rejected(self):
        with pytest.raises(InvalidMarginsError):
            GeneralMargins((), ())

    def test_parse(self):
        assert GeneralMargins.parse("2,1", "1, 1, 1") == GeneralMargins((2, 1), (1, 1, 1))
        with pytest.raises(InvalidMarginsError):
            GeneralMargins.parse("2,x", "3")
