"""Seeded random generators shared by the CLI selftest and the test suite."""

from __future__ import annotations

import math
import random

from . import forms
from .bundle import BundleInput
from .forms import CohomologyClass, IntersectionForm


def random_form(
    rng: random.Random, max_rank: int = 24, even_only: bool = False
) -> IntersectionForm:
    """Random direct sum of <1>, <-1>, H, E8 blocks with rank <= max_rank."""
    pool = ["H", "E8"] if even_only else ["1", "-1", "H", "E8"]
    names: list[str] = []
    rank = 0
    while True:
        name = rng.choice(pool)
        size = len(forms.BLOCK_MATRICES[name])
        if rank + size > max_rank:
            break
        names.append(name)
        rank += size
        if rank >= max_rank or rng.random() < 0.25:
            break
    if not names:
        names = ["H"] if even_only else ["1"]
    return forms.from_blocks(names)


def random_characteristic(rng: random.Random, q: IntersectionForm) -> CohomologyClass:
    """A characteristic class: diagonal parities plus random even offsets."""
    return CohomologyClass(
        q.rows[i][i] + 2 * rng.randint(-3, 3) for i in range(q.rank)
    )


def random_primitive(rng: random.Random, n: int) -> CohomologyClass:
    """A primitive (gcd 1) integer vector of length n."""
    while True:
        vec = [rng.randint(-4, 4) for _ in range(n)]
        g = math.gcd(*vec)
        if g:
            return CohomologyClass(v // g for v in vec)


def random_bundle_input(rng: random.Random, max_rank: int = 12) -> BundleInput:
    """A valid divisibility-2 bundle input over a random block form."""
    even_only = rng.random() < 0.3
    q = random_form(rng, max_rank=max_rank, even_only=even_only)
    ct = random_primitive(rng, q.rank)
    c1 = CohomologyClass(2 * x for x in ct.pairings)
    ks = rng.randint(0, 1)
    return BundleInput(q, ks, c1)
