"""Seeded rational sample vectors shared by the audit and lex tooling.

Coordinates are drawn from the grid {p/q : p in [-9, 9], q in {1, 2, 3}}.
With probability 1/3 a coordinate copies an earlier one, which forces ties
and exercises boundary/tie-breaker paths.  Per-trial generators derive
deterministically from (seed, trial index).
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .ratvec import RatVec

NUMERATOR_RANGE = (-9, 9)
DENOMINATORS = (1, 2, 3)
TIE_PROBABILITY = Fraction(1, 3)


def trial_rng(seed: int, index: int) -> Random:
    # string seeding hashes through sha512, stable across runs and platforms
    return Random("%d:%d" % (seed, index))


def grid_vector(rng: Random, n: int) -> RatVec:
    coords: list[Fraction] = []
    for i in range(n):
        if i > 0 and rng.random() < TIE_PROBABILITY:
            coords.append(coords[rng.randrange(i)])
        else:
            coords.append(
                Fraction(
                    rng.randint(*NUMERATOR_RANGE), rng.choice(DENOMINATORS)
                )
            )
    return RatVec(coords)


def integer_vector(rng: Random, n: int, bound: int) -> RatVec:
    """Vector with integer entries drawn uniformly from 0..bound."""
    return RatVec(Fraction(rng.randint(0, bound)) for _ in range(n))
