"""Seeded random modules, morphisms and exact sequences for property tests.

Sizes stay at desk scale: at most 4 generators and 4 relations, entries in
[-5, 5] over Z or [0, n) over Z/n.
"""
from __future__ import annotations

import random
from typing import Optional

from .ext import ext_module, representative_sequence
from .modules import Morphism, Presentation, cokernel, hom_module, image
from .ring import ZZ, RingSpec, Zmod
from .sequences import NExactSequence, splice, verify_exact


def random_ring(rng: random.Random) -> RingSpec:
    return rng.choice([ZZ, Zmod(4), Zmod(4), Zmod(6), Zmod(8), Zmod(9)])


def random_presentation(ring: RingSpec, rng: random.Random, max_gens: int = 4,
                        max_rels: int = 4, min_gens: int = 0) -> Presentation:
    g = rng.randint(min_gens, max_gens)
    k = rng.randint(0, max_rels) if g else 0
    if ring.is_integers:
        draw = lambda: rng.randint(-5, 5)
    else:
        draw = lambda: rng.randrange(ring.modulus)
    return Presentation(ring, g, [[draw() for _ in range(g)] for _ in range(k)])


def random_finite_presentation(ring: RingSpec, rng: random.Random, max_gens: int = 3) -> Presentation:
    """A finite module; over Z a random diagonal-ish torsion module."""
    if not ring.is_integers:
        return random_presentation(ring, rng, max_gens=max_gens)
    g = rng.randint(0, max_gens)
    rows = []
    for i in range(g):
        row = [rng.randint(-2, 2) if j > i else 0 for j in range(g)]
        row[i] = rng.choice([2, 2, 3, 4, 6])
        rows.append(row)
    return Presentation(ring, g, rows)


def random_morphism(M: Presentation, N: Presentation, rng: random.Random, bound: int = 5) -> Morphism:
    H = hom_module(M, N)
    coords = []
    for j in range(len(H.reps)):
        coords.append(rng.randint(-bound, bound))
    return H.morphism(coords)


def random_short_exact(ring: RingSpec, rng: random.Random, max_gens: int = 3,
                       finite: bool = False) -> NExactSequence:
    """Either ``0 -> im f -> B -> coker f -> 0`` for a random ``f`` or a random Ext^1 class."""
    pick = random_finite_presentation if finite else random_presentation
    if rng.random() < 0.5:
        A = pick(ring, rng, max_gens=max_gens)
        B = pick(ring, rng, max_gens=max_gens)
        f = random_morphism(A, B, rng)
        return verify_exact((image(f).incl, cokernel(f).proj))
    X = pick(ring, rng, max_gens=max_gens)
    Y = pick(ring, rng, max_gens=max_gens)
    return random_extension(X, Y, rng)


def random_extension(X: Presentation, Y: Presentation, rng: random.Random,
                     n: int = 1) -> NExactSequence:
    """Representative sequence of a random class in ``Ext^n(X, Y)`` (zero class if Ext vanishes)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    E = ext_module(n, X, Y)
    return representative_sequence(E.random_class(rng))


def random_exact_sequence(n: int, ring: RingSpec, rng: random.Random, max_gens: int = 3,
                          finite: bool = False) -> NExactSequence:
    """Splice of ``n`` random short exact sequences chained through random ends."""
    pick = random_finite_presentation if finite else random_presentation
    left = pick(ring, rng, max_gens=max_gens)
    seq: Optional[NExactSequence] = None
    for _ in range(n):
        right = pick(ring, rng, max_gens=max_gens)
        piece = random_extension(right, left, rng)
        seq = piece if seq is None else splice(seq, piece)
        left = right
    return seq
