import pytest

from galoiskit.galois import quintic_map
from galoiskit.galois.grid import PALETTE, REDUCIBLE, UNKNOWN, classify_cell, trinomial
from galoiskit.settings import settings
from tests.utils import poly


class TestTrinomial:
    def test(self):
        assert trinomial(-4, 2) == poly(1, 0, 0, 0, -4, 2)


class TestClassifyCell:
    def test(self):
        assert classify_cell(0, 0) == REDUCIBLE
        assert classify_cell(-4, 2) == "S5"
        assert classify_cell(0, 2) == "F20"
        assert classify_cell(0, 1) == REDUCIBLE

    def test_linear_factor(self):
        # x^5 - x = x(x - 1)(x + 1)(x^2 + 1)
        assert classify_cell(-1, 0) == REDUCIBLE

    def test_unknown(self):
        assert classify_cell(0, -2, max_primes=1) == UNKNOWN


class TestQuinticMap:
    @pytest.fixture(scope="class")
    def small_map(self):
        return quintic_map(bound=4)

    def test_shape(self, small_map):
        assert small_map.range == 4
        assert len(small_map.rows) == 9
        assert all(len(row) == 9 for row in small_map.rows)

    def test_cells(self, small_map):
        assert small_map.label_at(0, 0) == REDUCIBLE
        assert small_map.label_at(-4, 2) == "S5"
        assert small_map.label_at(0, 2) == "F20"
        # the first row holds b = R
        assert small_map.rows[0][0] == classify_cell(-4, 4)

    def test_histogram(self, small_map):
        histogram = small_map.histogram()
        assert sum(histogram.values()) == 81
        assert set(histogram) <= set(PALETTE)

    def test_unknown_cells(self, small_map):
        cells = small_map.unknown_cells()
        assert len(cells) == small_map.histogram().get(UNKNOWN, 0)
        for a, b in cells:
            assert small_map.label_at(a, b) == UNKNOWN

    def test_ppm(self, small_map):
        lines = small_map.to_ppm().splitlines()
        assert lines[:3] == ["P3", "9 9", "255"]
        assert len(lines) == 3 + 9
        assert lines[3].split()[:3] == list(map(str, PALETTE[small_map.rows[0][0]]))

    def test_workers(self, small_map):
        assert quintic_map(bound=1, workers=2).rows == quintic_map(bound=1).rows

    def test_progress(self):
        finished = []
        quintic_map(bound=1, progress=finished.append)
        assert finished == [1, 2, 3]

    def test_default_range(self):
        settings.__init__(quintic_range=1)
        assert quintic_map().range == 1

    def test_range_limit(self):
        with pytest.raises(ValueError, match="between 0 and 100"):
            quintic_map(bound=101)

    @pytest.fixture(scope="class")
    def full_map(self):
        return quintic_map(bound=40)

    @pytest.mark.slow
    def test_full_range(self, full_map):
        assert len(full_map.rows) == 81
        assert full_map.label_at(-4, 2) == "S5"
        assert full_map.label_at(0, 0) == REDUCIBLE
        histogram = full_map.histogram()
        assert sum(histogram.values()) == 81 * 81
        assert histogram.get(UNKNOWN, 0) * 20 <= 81 * 81
        assert histogram["S5"] == max(histogram.values())

    @pytest.mark.slow
    def test_binomial_column(self, full_map):
        # x^5 + b has group F20 unless -b is a fifth power
        fifth_powers = {n**5 for n in range(-2, 3)}
        for b in range(-40, 41):
            if b == 0:
                continue
            expected = REDUCIBLE if b in fifth_powers else "F20"
            assert full_map.label_at(0, b) == expected, b
