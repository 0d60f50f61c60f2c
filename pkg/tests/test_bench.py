from rootwind.bench import bench_chains, random_pair
import random


def test_random_pair_degrees():
    P, Q = random_pair(random.Random(0), 6)
    assert P.degree == 6 and Q.degree == 5


def test_small_degrees_identical():
    rows = bench_chains(3, 3, seed=1)
    assert [r.degree for r in rows] == [2, 3]
    assert all(r.identical for r in rows)


def test_seed_determinism():
    a = [r.exact_part() for r in bench_chains(5, 2, seed=7)]
    b = [r.exact_part() for r in bench_chains(5, 2, seed=7)]
    assert a == b
    c = [r.exact_part() for r in bench_chains(5, 2, seed=8)]
    assert a != c
