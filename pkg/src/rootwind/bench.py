"""Timing of structured subresultants against direct determinant evaluation."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from .exact import Poly
from .subres import subresultants_naive, subresultants_structured


@dataclass(frozen=True)
class BenchRow:
    degree: int
    trials: int
    structured_seconds: float
    naive_seconds: float
    identical: bool
    max_num_bits: int
    max_den_bits: int

    def exact_part(self) -> dict:
        """Everything except the wall-clock columns (reproducible under a seed)."""
        d = asdict(self)
        del d["structured_seconds"], d["naive_seconds"]
        return d


def random_pair(rng: random.Random, degree: int, height: int = 9):
    """P of degree ``degree`` and Q of degree ``degree - 1`` with small integer coefficients."""

    def draw(n):
        cs = [rng.randint(-height, height) for _ in range(n)]
        lead = 0
        while not lead:
            lead = rng.randint(-height, height)
        return Poly(cs + [lead])

    return draw(degree), draw(degree - 1)


def _bits(seq):
    num = den = 0
    for p in seq.polys:
        for c in p.coeffs:
            c = Fraction(c)
            num = max(num, abs(c.numerator).bit_length())
            den = max(den, c.denominator.bit_length())
    return num, den


def bench_chains(max_deg: int, trials: int, seed: int, min_deg: int = 2) -> list[BenchRow]:
    rng = random.Random(seed)
    rows = []
    for deg in range(min_deg, max_deg + 1):
        t_struct = t_naive = 0.0
        same = True
        nb = db = 0
        for _ in range(trials):
            P, Q = random_pair(rng, deg)
            t0 = time.perf_counter()
            s = subresultants_structured(P, Q)
            t1 = time.perf_counter()
            n = subresultants_naive(P, Q)
            t2 = time.perf_counter()
            t_struct += t1 - t0
            t_naive += t2 - t1
            same = same and s.same_as(n)
            b = _bits(s)
            nb, db = max(nb, b[0]), max(db, b[1])
        rows.append(BenchRow(deg, trials, t_struct, t_naive, same, nb, db))
    return rows
