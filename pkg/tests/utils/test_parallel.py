"""
Tests for cohexp.utils.parallel and cohexp.utils.sampling
"""

import numpy as np

from cohexp.utils.parallel import all_chunks, chunked, thread_map
from cohexp.utils.sampling import pair_sweep


class TestThreadMap:
    """Tests for thread_map."""

    def test_order_preserved(self):
        """Test that results come back in input order."""
        assert thread_map(lambda x: x * x, range(10), threads=4) == [x * x for x in range(10)]

    def test_single_thread(self):
        """Test the inline path."""
        assert thread_map(str, [1, 2], threads=1) == ["1", "2"]


class TestChunks:
    """Tests for chunked and all_chunks."""

    def test_partition(self):
        """Test that pieces cover the range without overlap."""
        pieces = chunked(10, 3)
        assert [len(r) for r in pieces] == [4, 3, 3]
        assert [i for r in pieces for i in r] == list(range(10))

    def test_more_parts_than_items(self):
        """Test that empty pieces are not produced."""
        assert len(chunked(2, 5)) == 2
        assert chunked(0, 3) == [range(0, 0)]

    def test_all_chunks(self):
        """Test the conjunction over pieces."""
        assert all_chunks(lambda r: all(i < 10 for i in r), 10, threads=3)
        assert not all_chunks(lambda r: 7 not in r, 10, threads=3)


class TestPairSweep:
    """Tests for pair_sweep."""

    def test_exhaustive(self):
        """Test all pairs when they fit the budget."""
        sweep = pair_sweep(3, 9, 100, np.random.default_rng(0))
        assert sweep.exhaustive
        assert sweep.left.tolist() == [0, 0, 0, 1, 1, 1, 2, 2, 2]
        assert sweep.right.tolist() == [0, 1, 2, 0, 1, 2, 0, 1, 2]
        assert sweep.describe() == "exhaustive, 9 pairs"

    def test_sampled_is_seeded(self):
        """Test that sampling is reproducible from the seed."""
        a = pair_sweep(100, 50, 20, np.random.default_rng(5))
        b = pair_sweep(100, 50, 20, np.random.default_rng(5))
        assert not a.exhaustive
        assert a.size == 20
        assert np.array_equal(a.left, b.left) and np.array_equal(a.right, b.right)
        assert a.describe() == "sampled, 20 pairs"
