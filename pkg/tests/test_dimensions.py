import random

import pytest
from hypothesis import given, strategies as st

from conftest import R4, cyc, free, seeds
from yoneda_ext import ZZ, Zmod, canonical_decomposition, ext_module, ext_via_injectives, fd, id, pd
from yoneda_ext.dimensions import cosyzygy, injective_presentation
from yoneda_ext.errors import ContractViolation, UnsupportedRing
from yoneda_ext.random_gen import random_presentation


def test_pd_examples():
    d = pd(cyc(R4, 2), 16)
    assert d.kind == "infinite" and d.period == 1 and d.witness == (1, 2)
    assert str(d) == "infinite (period 1)"
    assert pd(free(ZZ, 2)).value == 0
    assert pd(free(R4)).value == 0
    assert pd(cyc(ZZ, 6)).value == 1


@given(seeds)
def test_pd_over_integers_at_most_one(seed):
    d = pd(random_presentation(ZZ, random.Random(seed)))
    assert d.kind == "finite" and d.value in (0, 1)


def test_id_examples():
    assert id(free(R4)).value == 0
    d = id(cyc(R4, 2))
    assert d.kind == "infinite" and d.period == 1
    assert id(cyc(Zmod(6), 3)).value == 0
    with pytest.raises(UnsupportedRing):
        id(cyc(ZZ, 2))


@given(st.sampled_from([Zmod(4), Zmod(6), Zmod(8), Zmod(9)]), seeds)
def test_pd_equals_id_over_self_injective_rings(ring, seed):
    M = random_presentation(ring, random.Random(seed), max_gens=3)
    p, i = pd(M), id(M)
    assert p.kind == i.kind
    assert p.kind != "at_least"
    if p.kind == "finite":
        assert p.value == i.value == 0


def test_at_least_when_steps_run_out():
    # Z/2 + Z/4 + Z/8 over Z/8 needs more than one step to recur
    M = cyc(Zmod(8), 2)
    d = pd(M, max_steps=1)
    assert d.kind == "at_least" and d.value == 2
    assert str(d) == ">= 2"
    with pytest.raises(ContractViolation):
        pd(M, max_steps=0)


def test_fd_equals_pd_with_note():
    d = fd(cyc(ZZ, 4))
    assert d.value == 1 and "fd = pd" in d.note
    assert fd(cyc(R4, 2)).kind == "infinite"


def test_injective_presentation_and_cosyzygy():
    Y = cyc(R4, 2)
    p = injective_presentation(Y)
    assert canonical_decomposition(p.I) == canonical_decomposition(free(R4))
    assert all(canonical_decomposition(cosyzygy(Y, k)).torsion == (2,) for k in range(5))


@given(st.sampled_from([Zmod(4), Zmod(6), Zmod(8), Zmod(9)]), seeds, st.integers(1, 3))
def test_injective_route_agrees_with_projective_route(ring, seed, n):
    rng = random.Random(seed)
    X = random_presentation(ring, rng, max_gens=2)
    Y = random_presentation(ring, rng, max_gens=2)
    assert canonical_decomposition(ext_via_injectives(n, X, Y)) == ext_module(n, X, Y).invariants


def test_dimension_json():
    assert pd(cyc(R4, 2)).to_json() == {"kind": "infinite", "value": None, "period": 1, "witness": [1, 2]}
