import random

import pytest
from hypothesis import given, strategies as st

from conftest import R4, cyc, free, rings, seeds
from yoneda_ext import (
    ZZ,
    Morphism,
    Presentation,
    canonical_decomposition,
    class_of,
    cut,
    direct_sum,
    pullback_sequence,
    pushout_sequence,
    splice,
    verify_exact,
    zero_sequence,
)
from yoneda_ext.errors import ContractViolation, NotEpi, NotExact, NotExactAt, NotMono
from yoneda_ext.modules import is_iso
from yoneda_ext.random_gen import random_exact_sequence, random_morphism, random_presentation, random_short_exact
from yoneda_ext.sequences import NExactSequence, SequenceMorphism, pullback_ladder, pushout_ladder


def test_direct_sum_sequence_valid():
    Y, X = cyc(ZZ, 3), free(ZZ)
    S = direct_sum(Y, X)
    E = verify_exact((S.injections[0], S.projections[1]))
    assert E.length == 1 and E.left == Y and E.right == X


def test_mult2_sequence_valid(z_mult2):
    assert z_mult2.length == 1


def test_mult2_onto_z4_rejected():
    z, z4 = free(ZZ), cyc(ZZ, 4)
    with pytest.raises(NotExact) as exc:
        verify_exact([Morphism(z, z, [[2]]), Morphism(z, z4, [[1]])])
    assert isinstance(exc.value, (NotEpi, NotExactAt))


def test_verify_reports_first_failing_node():
    a, z4 = cyc(R4, 2), free(R4)
    with pytest.raises(NotMono):
        verify_exact([Morphism(a, z4, [[0]]), Morphism(z4, a, [[1]])])
    with pytest.raises(NotExactAt) as exc:
        verify_exact([Morphism(a, z4, [[2]]), Morphism.zero(z4, z4), Morphism.identity(z4)])
    assert exc.value.index == 1
    with pytest.raises(NotEpi):
        verify_exact([Morphism(a, z4, [[2]]), Morphism(z4, z4, [[2]])])


def test_sequences_cannot_be_built_unchecked():
    with pytest.raises(TypeError):
        NExactSequence([])


def test_zero_sequence_shapes():
    Y, X = cyc(R4, 2), free(R4)
    E1 = zero_sequence(1, Y, X)
    assert canonical_decomposition(E1.middles[0]) == canonical_decomposition(direct_sum(Y, X).module)
    E2 = zero_sequence(2, Y, X)
    assert E2.middles == (Y, X) and E2.arrows[1].is_zero()
    E3 = zero_sequence(3, Y, X)
    assert E3.length == 3
    for E in (E1, E2, E3):
        assert class_of(E).is_zero()


def test_splice_with_zero_class_is_zero(z4_nonsplit):
    a = z4_nonsplit.left
    F = zero_sequence(1, a, a)
    assert class_of(splice(z4_nonsplit, F)).is_zero()
    assert class_of(splice(F, z4_nonsplit)).is_zero()


def test_splice_requires_matching_ends(z4_nonsplit):
    other = zero_sequence(1, free(R4), free(R4))
    with pytest.raises(ContractViolation):
        splice(z4_nonsplit, other)


@given(rings, seeds, st.integers(2, 3))
def test_cut_then_splice_reproduces(ring, seed, n):
    rng = random.Random(seed)
    F = random_exact_sequence(n, ring, rng, max_gens=2)
    for i in range(2, F.length + 1):
        L, R = cut(F, i)
        assert L.right == R.left
        assert splice(L, R) == F


def test_cut_index_range(z4_nonsplit):
    with pytest.raises(ContractViolation):
        cut(z4_nonsplit, 1)


@given(rings, seeds)
def test_splice_is_exact(ring, seed):
    rng = random.Random(seed)
    E = random_short_exact(ring, rng, max_gens=2)
    X = random_presentation(ring, rng, max_gens=2)
    from yoneda_ext.random_gen import random_extension

    F = random_extension(X, E.right, rng)
    S = splice(E, F)
    verify_exact(S.arrows)
    assert S.length == 2


@given(rings, seeds)
def test_three_lemma_on_equivalences(ring, seed):
    """A ladder with identity ends between short exact sequences has an iso in the middle."""
    rng = random.Random(seed)
    E = random_short_exact(ring, rng, max_gens=2)
    cls = class_of(E)
    from yoneda_ext import representative_sequence

    F = representative_sequence(cls)
    # lift: compare E with the pushout of the resolution along the witness
    lad = pushout_ladder(cls.witness, cls.parent.tower.resolution())
    assert lad.target == F
    # direct comparison ladder F -> E via the universal property of the pushout
    from yoneda_ext.modules import solve_morphism

    iota, pi = E.arrows
    f0, f1 = F.arrows
    sol = solve_morphism(F.middles[0], E.middles[0], [(None, f0, iota), (pi, None, f1)])
    assert sol is not None
    mid = sol[0]
    SequenceMorphism(F, E, (Morphism.identity(E.left), mid, Morphism.identity(E.right)))
    assert is_iso(mid)


def test_pushout_sequence_examples(z4_nonsplit):
    F = z4_nonsplit
    G = pushout_sequence(Morphism.identity(F.left), F)
    assert class_of(G) == class_of(F)
    assert is_iso(pushout_ladder(Morphism.identity(F.left), F).components[1])
    B = cyc(R4, 2)
    assert class_of(pushout_sequence(Morphism.zero(F.left, B), F)).is_zero()


def test_pullback_sequence_examples(z4_nonsplit):
    F = z4_nonsplit
    G = pullback_sequence(F, Morphism.identity(F.right))
    assert class_of(G) == class_of(F)
    assert is_iso(pullback_ladder(F, Morphism.identity(F.right)).components[1])
    A = cyc(R4, 2)
    assert class_of(pullback_sequence(F, Morphism.zero(A, F.right))).is_zero()


@given(rings, seeds)
def test_ladders_commute(ring, seed):
    rng = random.Random(seed)
    F = random_short_exact(ring, rng, max_gens=2)
    B = random_presentation(ring, rng, max_gens=2)
    A = random_presentation(ring, rng, max_gens=2)
    beta = random_morphism(F.left, B, rng)
    alpha = random_morphism(A, F.right, rng)
    # SequenceMorphism checks every square on construction
    assert pushout_ladder(beta, F).target.left == B
    assert pullback_ladder(F, alpha).source.right == A


def test_ladder_rejects_noncommuting(z4_nonsplit):
    F = z4_nonsplit
    with pytest.raises(ContractViolation):
        SequenceMorphism(F, F, (Morphism.identity(F.left), Morphism.zero(F.middles[0], F.middles[0]),
                                Morphism.identity(F.right)))
