"""Narrated demonstrations; every number printed is recomputed on the spot."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .dimensions import ext_via_injectives, id as injective_dim, pd
from .errors import ContractViolation
from .ext import class_of, ext_module, representative_sequence
from .les import les_contravariant, les_covariant
from .modules import Presentation, canonical_decomposition, embed_into_injective, cokernel
from .random_gen import random_finite_presentation, random_presentation, random_short_exact
from .ring import ZZ, Zmod
from .sequences import splice, verify_exact


@dataclass
class GalleryReport:
    scenario: str
    lines: list = field(default_factory=list)
    verdict: bool = True

    def say(self, text=""):
        self.lines.append(text)

    def to_json(self):
        return {"scenario": self.scenario, "lines": self.lines, "verdict": self.verdict}


def kadec_analogue(seed: int = 0, top: int = 8) -> GalleryReport:
    R = Zmod(4)
    M = Presentation.cyclic(R, 2)
    rep = GalleryReport("kadec-analogue")
    rep.say("X = Y = Z/2 over Z/4; syzygy tower 0 -> Z/2 -> Z/4 -> Z/2 -> 0 repeats")
    for n in range(1, top + 1):
        E = ext_module(n, M, M)
        inj = canonical_decomposition(ext_via_injectives(n, M, M))
        ok = E.order == 2 and inj.order == 2
        rep.verdict &= ok
        rep.say(f"  Ext^{n}(Z/2, Z/2) = {E.invariants}   (injective side: {inj})")
    p, i = pd(M), injective_dim(M)
    rep.say(f"  pd = {p}, id = {i}")
    rep.verdict &= p.kind == "infinite" and p.period == 1 and i.kind == "infinite" and i.period == 1
    return rep


def hereditary_collapse(seed: int = 0, pairs: int = 50) -> GalleryReport:
    rng = random.Random(seed)
    rep = GalleryReport("hereditary-collapse")
    rep.say(f"{pairs} random pairs over Z (seed {seed}); every syzygy of a Z-module is free")
    nonzero1 = zero2 = 0
    for _ in range(pairs):
        X = random_presentation(ZZ, rng)
        Y = random_presentation(ZZ, rng)
        if not ext_module(1, X, Y).is_zero():
            nonzero1 += 1
        if ext_module(2, X, Y).is_zero():
            zero2 += 1
    rep.say(f"  Ext^1 nonzero on {nonzero1} pairs, Ext^2 zero on {zero2}/{pairs}")
    rep.verdict = zero2 == pairs
    return rep


def les_demo(seed: int = 0, n_max: int = 3) -> GalleryReport:
    rng = random.Random(seed)
    R = Zmod(4)
    while True:
        Zseq = random_short_exact(R, rng)
        A = random_presentation(R, rng, min_gens=1, max_gens=2)
        if not any(canonical_decomposition(M).is_zero() for M in Zseq.modules + (A,)):
            break
    Y, Zm, X = Zseq.modules
    rep = GalleryReport("les-demo")
    rep.say(f"sampled 0 -> {Y} -> {Zm} -> {X} -> 0 over Z/4, fourth module {A}")
    for les in (les_covariant(Zseq, A, n_max), les_contravariant(Zseq, A, n_max)):
        rep.say(f"  {les.kind}:")
        for lab, node, cert in zip(les.labels, les.nodes, les.certificates):
            rep.say(f"    {lab:<14} {str(node.invariants):<16} {cert.check}: {cert.exact}")
        rep.verdict &= les.exact
    return rep


def lemma_ef(seed: int = 0) -> GalleryReport:
    rng = random.Random(seed)
    R = Zmod(4)
    rep = GalleryReport("lemma-ef")
    Y = random_finite_presentation(R, rng)
    while canonical_decomposition(Y).is_zero():
        Y = random_finite_presentation(R, rng)
    iota = embed_into_injective(Y)
    Zmod_, pi = cokernel(iota)
    E = verify_exact((iota, pi))
    X = Presentation.cyclic(R, 2)
    n = 1
    rep.say(f"E: 0 -> {Y} -> {iota.target} -> {Zmod_} -> 0 with injective middle; X = {X}")
    hyp = ext_module(n, X, iota.target).is_zero()
    rep.say(f"  hypothesis Ext^{n}(X, E) = 0: {hyp}")
    checked = 0
    for F in ext_module(n, X, Zmod_).elements():
        EF = class_of(splice(E, representative_sequence(F))) if not F.parent.is_zero() else None
        ef_zero = EF is None or EF.is_zero()
        ok = (not ef_zero) or F.is_zero()
        rep.say(f"  F = {F.element}: EF ~ 0 is {ef_zero}, F ~ 0 is {F.is_zero()}")
        rep.verdict &= ok and hyp
        checked += 1
    rep.say(f"  conclusion holds on all {checked} classes of Ext^{n}(X, Z)")
    return rep


def n_cor(seed: int = 0, pool: int = 8) -> GalleryReport:
    rng = random.Random(seed)
    rep = GalleryReport("n-cor")
    rep.say("if Ext^n(X, T) = 0 on a test pool then Ext^m(X, T) = 0 for m = n+1, n+2")
    for R in (ZZ, Zmod(4), Zmod(6)):
        tests = [Presentation.cyclic(R, d) for d in (2, 3, 4)] + [random_presentation(R, rng) for _ in range(3)]
        for _ in range(pool):
            X = random_presentation(R, rng, max_gens=3)
            for n in (1, 2):
                if all(ext_module(n, X, T).is_zero() for T in tests):
                    ok = all(ext_module(m, X, T).is_zero() for m in (n + 1, n + 2) for T in tests)
                    rep.verdict &= ok
                    rep.say(f"  {R}: X = {X}, n = {n}: higher Ext vanish: {ok}")
                    break
    return rep


SCENARIOS = {
    "kadec-analogue": kadec_analogue,
    "hereditary-collapse": hereditary_collapse,
    "les-demo": les_demo,
    "lemma-ef": lemma_ef,
    "n-cor": n_cor,
}


def gallery(scenario: str, seed: int = 0) -> GalleryReport:
    try:
        fn = SCENARIOS[scenario]
    except KeyError:
        raise ContractViolation(f"unknown scenario {scenario!r}; choose from {sorted(SCENARIOS)}") from None
    return fn(seed=seed)
