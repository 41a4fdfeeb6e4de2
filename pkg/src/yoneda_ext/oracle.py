"""Brute-force element enumeration, used as an independent check on the engine.

Finite modules are listed element by element (cosets of the relation
subgroup inside ``(Z/N)^g``); kernels, images, Hom counts and Ext^1 counts are
then recomputed by exhaustive search.  Nothing here calls the Smith or
Hermite machinery, except that ``ext_count`` for ``n >= 2`` takes the syzygy
``kappa^(n-1) X`` from the engine and counts ``Ext^1`` of it by brute force.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Optional

from .errors import ContractViolation, SizeBoundExceeded
from .modules import Presentation

DEFAULT_BOUND = 10_000
AMBIENT_BOUND = 250_000


def _det(rows):
    n = len(rows)
    M = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                for j in range(c, n):
                    M[i][j] -= f * M[c][j]
    return int(det)


def order_by_minors(M: Presentation) -> Optional[int]:
    """Order of a module over Z as the gcd of maximal minors (None if infinite)."""
    if M.ring.modulus is not None:
        raise ContractViolation("order_by_minors is for modules over Z")
    g = M.generators
    if g == 0:
        return 1
    rows = [list(r) for r in M.relations.entries]
    out = 0
    for combo in itertools.combinations(rows, g):
        out = gcd(out, abs(_det(combo)))
        if out == 1:
            break
    return out or None


def determinantal_divisor(rows, g: int, k: int) -> int:
    """gcd of all k x k minors of the relation rows (1 for k = 0)."""
    if k == 0:
        return 1
    out = 0
    for rsel in itertools.combinations(rows, k):
        for csel in itertools.combinations(range(g), k):
            out = gcd(out, abs(_det([[r[c] for c in csel] for r in rsel])))
            if out == 1:
                return 1
    return out


def exponent_by_minors(M: Presentation) -> Optional[int]:
    """Largest invariant factor of a module over Z, ``D_g / D_(g-1)`` (None if infinite)."""
    if M.ring.modulus is not None:
        raise ContractViolation("exponent_by_minors is for modules over Z")
    g = M.generators
    if g == 0:
        return 1
    rows = [list(r) for r in M.relations.entries if any(r)]
    top = determinantal_divisor(rows, g, g) if len(rows) >= g else 0
    if top == 0:
        return None
    return top // determinantal_divisor(rows, g, g - 1)


def relation_subgroup(rows, N: int, g: int, limit: Optional[int] = None) -> set:
    """All ``Z``-combinations of ``rows`` reduced mod N, by breadth-first closure."""
    rels = {tuple(x % N for x in r) for r in rows}
    zero = (0,) * g
    rels.discard(zero)
    sub = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for r in rels:
                t = tuple((a + b) % N for a, b in zip(v, r))
                if t not in sub:
                    sub.add(t)
                    nxt.append(t)
        if limit is not None and len(sub) > limit:
            raise SizeBoundExceeded("relation subgroup too large")
        frontier = nxt
    return sub


class EnumeratedModule:
    """All elements of a finite module as canonical coset representatives."""

    def __init__(self, M: Presentation, bound: int = DEFAULT_BOUND, modulus: Optional[int] = None,
                 ambient_bound: int = AMBIENT_BOUND):
        self.presentation = M
        g = M.generators
        if modulus is None:
            if M.ring.modulus is not None:
                modulus = M.ring.modulus
            else:
                modulus = exponent_by_minors(M)
                if modulus is None:
                    raise SizeBoundExceeded("module is infinite")
        N = self.modulus = modulus
        if N ** g > ambient_bound:
            raise SizeBoundExceeded(f"ambient (Z/{N})^{g} exceeds {ambient_bound}")
        sub = relation_subgroup(M.relations.entries, N, g)
        self.subgroup_size = len(sub)
        if N ** g // len(sub) > bound:
            raise SizeBoundExceeded(f"module has more than {bound} elements")
        label = {}
        elements = []
        for v in itertools.product(range(N), repeat=g):
            if v in label:
                continue
            idx = len(elements)
            elements.append(v)
            for s in sub:
                label[tuple((a + b) % N for a, b in zip(v, s))] = idx
        self.elements = elements
        self._label = label

    def __len__(self):
        return len(self.elements)

    def index(self, v) -> int:
        return self._label[tuple(x % self.modulus for x in v)]

    @property
    def zero(self) -> int:
        return self.index([0] * self.presentation.generators)

    def generator(self, j) -> int:
        return self.index([int(i == j) for i in range(self.presentation.generators)])

    def exponent(self) -> int:
        """Least m > 0 killing every element (lcm of the generator orders)."""
        out = 1
        for j in range(self.presentation.generators):
            v = [int(i == j) for i in range(self.presentation.generators)]
            m = 1
            while self.index([m * x for x in v]) != self.zero:
                m += 1
            out = out * m // gcd(out, m)
        return out

    def combine(self, coeffs_and_elements) -> int:
        g = self.presentation.generators
        v = [0] * g
        for c, e in coeffs_and_elements:
            rep = self.elements[e]
            for i in range(g):
                v[i] += c * rep[i]
        return self.index(v)


def _apply(matrix, src: EnumeratedModule, tgt: EnumeratedModule):
    rows = matrix.entries
    out = []
    for rep in src.elements:
        out.append(tgt.index([sum(a * b for a, b in zip(row, rep)) for row in rows]))
    return out


def exact_by_enumeration(arrows, bound: int = DEFAULT_BOUND) -> bool:
    """Exactness of ``0 -> M_0 -> ... -> M_k -> 0`` by listing every element."""
    mods = [arrows[0].source] + [f.target for f in arrows]
    enum = [EnumeratedModule(M, bound) for M in mods]
    maps = [_apply(f.matrix, enum[i], enum[i + 1]) for i, f in enumerate(arrows)]
    if len(set(maps[0])) != len(enum[0]):
        return False
    if len(set(maps[-1])) != len(enum[-1]):
        return False
    for i in range(1, len(mods) - 1):
        im = set(maps[i - 1])
        ker = {e for e, img in enumerate(maps[i]) if img == enum[i + 1].zero}
        if im != ker:
            return False
    return True


def hom_count_by_enumeration(M: Presentation, N: Presentation, bound: int = DEFAULT_BOUND) -> int:
    """Number of maps M -> N: generator images checked against every relation."""
    eM = EnumeratedModule(M, bound)
    eN = EnumeratedModule(N, bound)
    g = M.generators
    if len(eN) ** g > 50 * bound:
        raise SizeBoundExceeded("too many candidate generator images")
    rels = [r for r in M.relations.entries if any(r)]
    if M.ring.modulus is not None:
        n = M.ring.modulus
        rels = rels + [tuple(n * (i == j) for j in range(g)) for i in range(g)]
    count = 0
    zero = eN.zero
    for imgs in itertools.product(range(len(eN)), repeat=g):
        if all(eN.combine(zip(r, imgs)) == zero for r in rels):
            count += 1
    return count


def ext1_count_by_enumeration(X: Presentation, Y: Presentation, bound: int = DEFAULT_BOUND,
                              work_bound: int = 2_000_000) -> int:
    """``|Ext^1(X, Y)|`` by building every extension from relation data.

    An extension is ``E_c = (Y + R^gX) / <rel Y, (-c_j, r_j)>`` for an
    assignment ``c`` of an element of Y to each relation ``r_j`` of X.  It
    is exact iff ``|E_c| = |X| |Y|``; exact assignments modulo split ones
    (found by exhaustive section search) count the classes.  Everything is
    computed inside ``(Z/N)^(gY + gX)`` with ``N = exp X * exp Y``, which
    kills every ``E_c``.
    """
    if X.ring != Y.ring:
        raise ContractViolation("X and Y live over different rings")
    ring = X.ring
    eX = EnumeratedModule(X, bound)
    eY = EnumeratedModule(Y, bound)
    gX, gY = X.generators, Y.generators
    g = gX + gY
    x_rels = [list(r) for r in X.relations.entries if any(r)]
    total = len(eX) * len(eY)
    N = ring.modulus if ring.modulus is not None else eX.exponent() * eY.exponent()
    k = len(x_rels)
    if len(eY) ** k * (N ** g // total) > work_bound:
        raise SizeBoundExceeded("extension enumeration too large")
    y_rows = [list(r) + [0] * gX for r in Y.relations.entries if any(r)]
    section_rels = x_rels
    if ring.modulus is not None:
        section_rels = x_rels + [[ring.modulus * (i == j) for j in range(gX)] for i in range(gX)]
    if ring.modulus is not None:
        y_rows += [[ring.modulus * (i == j) for j in range(g)] for i in range(gY)]
    exact = split = 0
    for c in itertools.product(range(len(eY)), repeat=k):
        rows = list(y_rows)
        for cj, r in zip(c, x_rels):
            rows.append([-x for x in eY.elements[cj]] + r)
        sub = relation_subgroup(rows, N, g, limit=N ** g // total)
        if N ** g // len(sub) != total:
            continue
        exact += 1
        if _has_section(sub, N, eY, gX, section_rels):
            split += 1
    if split == 0 or exact % split:
        raise ContractViolation("split extensions do not form a subgroup; oracle bug")
    return exact // split


def _has_section(sub, N, eY: EnumeratedModule, gX: int, x_rels) -> bool:
    # s(x_i) = (y_i, e_i); every lift of x_i has this form up to the image of Y
    gY = eY.presentation.generators
    for ys in itertools.product(eY.elements, repeat=gX):
        ok = True
        for r in x_rels:
            v = [0] * (gY + gX)
            for j, coef in enumerate(r):
                if coef:
                    y = ys[j]
                    for i in range(gY):
                        v[i] += coef * y[i]
                    v[gY + j] += coef
            if tuple(x % N for x in v) not in sub:
                ok = False
                break
        if ok:
            return True
    return False


def splits_by_enumeration(seq, bound: int = DEFAULT_BOUND) -> bool:
    """Does a short exact sequence admit a section (exhaustive search)?"""
    iota, pi = seq.arrows
    Y, M, X = seq.modules
    eM = EnumeratedModule(M, bound)
    eX = EnumeratedModule(X, bound)
    img = _apply(pi.matrix, eM, eX)
    gX = X.generators
    cands = [[e for e in range(len(eM)) if img[e] == eX.generator(i)] for i in range(gX)]
    rels = [r for r in X.relations.entries if any(r)]
    if X.ring.modulus is not None:
        rels = rels + [tuple(X.ring.modulus * (i == j) for j in range(gX)) for i in range(gX)]
    zero = eM.zero
    for choice in itertools.product(*cands):
        if all(eM.combine(zip(r, choice)) == zero for r in rels):
            return True
    return False


@dataclass(frozen=True)
class OracleReport:
    target: str
    engine: Any
    oracle: Any
    agree: bool

    def __str__(self):
        verdict = "agree" if self.agree else "DISAGREE"
        return f"{self.target}: engine={self.engine} oracle={self.oracle} -> {verdict}"


def oracle_check(target: str, inputs, bound: int = DEFAULT_BOUND) -> OracleReport:
    """Recompute ``target`` by enumeration and compare with the engine.

    ``target`` / ``inputs``: ``exactness`` / list of arrows;
    ``hom_count`` / ``(M, N)``; ``ext_count`` / ``(n, X, Y)``;
    ``splice_class`` / ``(E, F)`` of short exact sequences.
    """
    from .errors import NotExact
    from .ext import class_of, ext_module, syzygy_tower
    from .modules import hom_module
    from .sequences import splice, verify_exact

    if target == "exactness":
        arrows = list(inputs)
        try:
            verify_exact(arrows)
            engine = True
        except NotExact:
            engine = False
        oracle = exact_by_enumeration(arrows, bound)
        return OracleReport(target, engine, oracle, engine == oracle)
    if target == "hom_count":
        M, N = inputs
        engine = hom_module(M, N).module
        engine = _order(engine)
        oracle = hom_count_by_enumeration(M, N, bound)
        return OracleReport(target, engine, oracle, engine == oracle)
    if target == "ext_count":
        n, X, Y = inputs
        engine = ext_module(n, X, Y).order
        base = syzygy_tower(X, n - 1).kappa(n - 1) if n > 1 else X
        oracle = ext1_count_by_enumeration(base, Y, bound)
        return OracleReport(target, engine, oracle, engine == oracle)
    if target == "splice_class":
        E, F = inputs
        S = splice(E, F)
        exact = exact_by_enumeration(S.arrows, bound)
        some_split = splits_by_enumeration(E, bound) or splits_by_enumeration(F, bound)
        zero = class_of(S).is_zero()
        agree = exact and (zero or not some_split)
        return OracleReport(target, {"zero": zero}, {"exact": exact, "a_factor_splits": some_split}, agree)
    raise ContractViolation(f"unknown oracle target {target!r}")


def _order(M: Presentation):
    from .modules import canonical_decomposition

    return canonical_decomposition(M).order
