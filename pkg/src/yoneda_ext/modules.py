"""Finitely presented modules and the exact-category operations on them.

A :class:`Presentation` on ``g`` generators is ``R^g`` modulo the row span of
its relation matrix.  Over ``Z/n`` the module is treated as a ``Z``-module
whose relation lattice also contains ``n Z^g``; every construction below runs
on integer lattices and the results are reduced back to the base ring.

Modules produced by kernels, cokernels and Hom are returned in a canonical
diagonal presentation (one generator per invariant factor).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Optional, Sequence

from . import _lattice
from .errors import ContractViolation, InternalConsistencyError, NoSolution, RingMismatch, UnsupportedRing
from .ring import ZZ, Matrix, RingSpec


@dataclass(frozen=True)
class Presentation:
    ring: RingSpec
    generators: int
    relations: Matrix = None

    def __post_init__(self):
        g = self.generators
        if not isinstance(g, int) or g < 0:
            raise ContractViolation("generator count must be a non-negative int")
        rel = self.relations
        if rel is None:
            rel = Matrix.zeros(0, g, self.ring)
        elif not isinstance(rel, Matrix):
            rows = [list(r) for r in rel]
            rel = Matrix(rows, self.ring, (len(rows), g))
        if rel.ring != self.ring:
            raise RingMismatch("relations live over a different ring")
        if rel.cols != g:
            raise ContractViolation(f"relations have {rel.cols} columns, expected {g}")
        object.__setattr__(self, "relations", rel)

    @classmethod
    def free(cls, ring: RingSpec, rank: int) -> "Presentation":
        return cls(ring, rank)

    @classmethod
    def zero(cls, ring: RingSpec) -> "Presentation":
        return cls(ring, 0)

    @classmethod
    def cyclic(cls, ring: RingSpec, d: int) -> "Presentation":
        """``R / dR`` on a single generator."""
        return cls(ring, 1, [[d]])

    @classmethod
    def from_factors(cls, ring: RingSpec, factors: Sequence[int]) -> "Presentation":
        """Diagonal presentation with one generator per factor (0 = free)."""
        k = len(factors)
        rows = []
        for j, d in enumerate(factors):
            if ring.reduce(d):
                rows.append([d if i == j else 0 for i in range(k)])
        return cls(ring, k, rows)

    @cached_property
    def lattice(self) -> _lattice.Lattice:
        """Integer relation lattice in ``Z^g`` (includes ``n Z^g`` over ``Z/n``)."""
        gens = [list(r) for r in self.relations.entries]
        if self.ring.modulus is not None:
            n = self.ring.modulus
            gens += [[n * (i == j) for j in range(self.generators)] for i in range(self.generators)]
        return _lattice.Lattice(gens, self.generators)

    @cached_property
    def relation_rows(self) -> list:
        """Distinct nonzero relation rows (the ``n e_i`` rows are implicit)."""
        out = []
        for r in self.relations.entries:
            if any(r) and list(r) not in out:
                out.append(list(r))
        return out

    def contains(self, v) -> bool:
        """Is the ambient vector ``v`` zero in the module?"""
        return v in self.lattice

    def __str__(self):
        return str(canonical_decomposition(self))


@dataclass(frozen=True)
class InvariantFactors:
    free_rank: int
    torsion: tuple

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for an infinite module."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def _check_ring(*mods):
    rings = {m.ring for m in mods}
    if len(rings) > 1:
        raise RingMismatch("modules live over different rings: " + ", ".join(map(str, rings)))


class Morphism:
    """A module map given by its matrix on generators (target x source).

    Equality is equality of maps: the matrices may differ by anything whose
    columns vanish in the target.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Presentation, target: Presentation, matrix, check: bool = True):
        _check_ring(source, target)
        if not isinstance(matrix, Matrix):
            rows = [list(r) for r in matrix]
            matrix = Matrix(rows, source.ring, (target.generators, source.generators))
        if matrix.ring != source.ring:
            raise RingMismatch("matrix lives over a different ring")
        if matrix.shape != (target.generators, source.generators):
            raise ContractViolation(
                f"matrix shape {matrix.shape} != ({target.generators}, {source.generators})")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)
        if check and not self.is_well_defined():
            raise ContractViolation("matrix does not respect the source relations")

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    def is_well_defined(self) -> bool:
        F = self.matrix.entries
        for r in self.source.relation_rows:
            img = [sum(a * b for a, b in zip(row, r)) for row in F]
            if not self.target.contains(img):
                return False
        return True

    @classmethod
    def identity(cls, M: Presentation) -> "Morphism":
        return cls(M, M, Matrix.identity(M.generators, M.ring), check=False)

    @classmethod
    def zero(cls, M: Presentation, N: Presentation) -> "Morphism":
        return cls(M, N, Matrix.zeros(N.generators, M.generators, M.ring), check=False)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """``g @ f`` is the composite ``g o f``."""
        if not isinstance(other, Morphism):
            return NotImplemented
        if other.target != self.source:
            raise ContractViolation("morphisms are not composable")
        return Morphism(other.source, self.target, self.matrix @ other.matrix, check=False)

    def _same_ends(self, other):
        if self.source != other.source or self.target != other.target:
            raise ContractViolation("morphisms have different endpoints")

    def __add__(self, other):
        self._same_ends(other)
        return Morphism(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        self._same_ends(other)
        return Morphism(self.source, self.target, self.matrix - other.matrix, check=False)

    def __neg__(self):
        return Morphism(self.source, self.target, -self.matrix, check=False)

    def __mul__(self, k: int):
        return Morphism(self.source, self.target, self.matrix * k, check=False)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        M = self.matrix
        return all(self.target.contains(M.col(j)) for j in range(M.cols))

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.source, self.target))

    def __repr__(self):
        return (f"Morphism({self.source.generators}->{self.target.generators}, "
                f"{self.matrix.tolist()}, ring={self.source.ring})")


# --------------------------------------------------------------------------
# Solving linear equations in an unknown morphism


def solve_morphism(source: Presentation, target: Presentation, equations,
                   shuffle: Optional[int] = None):
    """Find ``h: source -> target`` with ``left @ h @ right == rhs`` for each equation.

    ``equations`` holds triples ``(left, right, rhs)``; ``left`` / ``right``
    may be None for the identity.  Returns ``(h, homogeneous)`` where
    ``homogeneous`` lists the nonzero morphisms solving the homogeneous
    system, or None if no solution exists.  ``shuffle`` permutes the unknowns
    with the given seed, which changes pivoting but never the answer set.
    """
    _check_ring(source, target)
    t, s = target.generators, source.generators
    nv = t * s
    eq_rows = []
    rhs_vals = []
    slack_blocks = []

    def add_block(L, R, G, modulo: Presentation):
        # L: a x t, R: s x b, G: a x b, constraint columnwise modulo `modulo`
        a = len(L)
        b = len(R[0]) if R else (len(G[0]) if G else 0)
        basis = modulo.lattice.basis
        for beta in range(b):
            first_slack = len(slack_blocks)
            slack_blocks.extend([None] * len(basis))
            for alpha in range(a):
                coeffs = {}
                La = L[alpha]
                for i in range(t):
                    li = La[i]
                    if li:
                        base = i * s
                        for j in range(s):
                            rj = R[j][beta]
                            if rj:
                                coeffs[base + j] = coeffs.get(base + j, 0) + li * rj
                slack = {first_slack + k: -row[alpha] for k, row in enumerate(basis) if row[alpha]}
                eq_rows.append((coeffs, slack))
                rhs_vals.append(G[alpha][beta])

    rels = source.relation_rows
    if rels:
        ident_t = _lattice.identity(t)
        R = [[r[j] for r in rels] for j in range(s)]
        add_block(ident_t, R, [[0] * len(rels) for _ in range(t)], target)
    for left, right, rhs in equations:
        if rhs.source.ring != source.ring:
            raise RingMismatch("equation over a different ring")
        if left is None:
            if rhs.target != target:
                raise ContractViolation("rhs target mismatch")
            L = _lattice.identity(t)
        else:
            if left.source != target or left.target != rhs.target:
                raise ContractViolation("left factor does not fit")
            L = [list(r) for r in left.matrix.entries]
        if right is None:
            if rhs.source != source:
                raise ContractViolation("rhs source mismatch")
            R = _lattice.identity(s)
        else:
            if right.target != source or right.source != rhs.source:
                raise ContractViolation("right factor does not fit")
            R = [list(r) for r in right.matrix.entries]
        if rhs.source.generators == 0 or rhs.target.generators == 0:
            continue
        add_block(L, R, [list(r) for r in rhs.matrix.entries], rhs.target)

    ns = len(slack_blocks)
    total = nv + ns
    perm = list(range(total))
    if shuffle is not None:
        random.Random(shuffle).shuffle(perm)
    A = []
    for coeffs, slack in eq_rows:
        row = [0] * total
        for k, v in coeffs.items():
            row[perm[k]] = v
        for k, v in slack.items():
            row[perm[nv + k]] = v
        A.append(row)
    if not A:
        x0 = [0] * total
        H = [[int(i == j) for j in range(total)] for i in range(total)]
    else:
        res = _lattice.solve(A, rhs_vals, len(A), total)
        if res is None:
            return None
        x0, H = res

    def to_morphism(x):
        vals = [x[perm[k]] for k in range(nv)]
        mat = Matrix([vals[i * s:(i + 1) * s] for i in range(t)], source.ring, (t, s))
        return Morphism(source, target, mat, check=False)

    h = to_morphism(x0)
    homog = []
    for v in H:
        m = to_morphism(v)
        if not m.is_zero():
            homog.append(m)
    return h, homog


def lift(g: Morphism, p: Morphism, shuffle=None) -> Optional[Morphism]:
    """Some ``h`` with ``p @ h == g`` (``g: C -> B``, ``p: A -> B``), or None."""
    res = solve_morphism(g.source, p.source, [(p, None, g)], shuffle=shuffle)
    return None if res is None else res[0]


def extend(g: Morphism, i: Morphism, shuffle=None) -> Optional[Morphism]:
    """Some ``h`` with ``h @ i == g`` (``g: A -> C``, ``i: A -> B``), or None."""
    res = solve_morphism(i.target, g.target, [(None, i, g)], shuffle=shuffle)
    return None if res is None else res[0]


# --------------------------------------------------------------------------
# Canonical forms


def _sq_presentation(ring: RingSpec, sq: _lattice.Subquotient) -> Presentation:
    if ring.modulus is not None and 0 in sq.factors:
        raise InternalConsistencyError("free summand in a module over Z/n lattice computation")
    return Presentation.from_factors(ring, sq.factors)


def canonical_decomposition(M: Presentation) -> InvariantFactors:
    """Invariant factors ``d1 | d2 | ...`` (ascending) plus free rank.

    Over ``Z/n`` a free summand appears as a factor equal to ``n``.
    """
    g = M.generators
    sq = _lattice.Subquotient(_lattice.identity(g), M.lattice.basis, g)
    free = sum(1 for d in sq.factors if d == 0)
    return InvariantFactors(free, tuple(d for d in sq.factors if d))


def is_zero_module(M: Presentation) -> bool:
    return canonical_decomposition(M).is_zero()


@dataclass(frozen=True)
class Simplified:
    module: Presentation
    to_canonical: Morphism
    from_canonical: Morphism


def simplify(M: Presentation) -> Simplified:
    """Diagonal presentation isomorphic to ``M`` with the two inverse isomorphisms."""
    g = M.generators
    sq = _lattice.Subquotient(_lattice.identity(g), M.lattice.basis, g)
    S = _sq_presentation(M.ring, sq)
    k = S.generators
    fwd = [sq.coords([int(i == j) for i in range(g)]) for j in range(g)]
    fwd = Matrix([[fwd[j][i] for j in range(g)] for i in range(k)], M.ring, (k, g))
    back = Matrix([[sq.gens[j][i] for j in range(k)] for i in range(g)], M.ring, (g, k))
    return Simplified(S, Morphism(M, S, fwd, check=False), Morphism(S, M, back, check=False))


# --------------------------------------------------------------------------
# Hom


def _flat(matrix_rows):
    return [x for row in matrix_rows for x in row]


def morphism_lattice_generators(M: Presentation, N: Presentation):
    """Generators of the lattice of matrices (flattened row-major) defining maps M -> N."""
    h, g = N.generators, M.generators
    nv = h * g
    rels = M.relation_rows
    if not rels or nv == 0:
        return _lattice.identity(nv)
    basis = N.lattice.basis
    nb = len(basis)
    total = nv + len(rels) * nb
    A = []
    for k, r in enumerate(rels):
        for i in range(h):
            row = [0] * total
            for j in range(g):
                if r[j]:
                    row[i * g + j] = r[j]
            for rho, b in enumerate(basis):
                if b[i]:
                    row[nv + k * nb + rho] = -b[i]
            A.append(row)
    ker = _lattice.kernel(A, len(A), total)
    return [v[:nv] for v in ker]


def vanishing_matrix_generators(M: Presentation, N: Presentation):
    """Generators of the matrices whose columns all vanish in N (the zero maps)."""
    h, g = N.generators, M.generators
    out = []
    for j in range(g):
        for b in N.lattice.basis:
            mat = [0] * (h * g)
            for i in range(h):
                mat[i * g + j] = b[i]
            out.append(mat)
    return out


@dataclass(frozen=True, eq=False)
class HomModule:
    """``Hom(source, target)`` with explicit generator morphisms."""

    source: Presentation
    target: Presentation
    module: Presentation
    reps: tuple
    _sq: _lattice.Subquotient = field(repr=False)

    def element(self, f: Morphism) -> tuple:
        """Coordinates of the morphism ``f`` in the generators of :attr:`module`."""
        if f.source != self.source or f.target != self.target:
            raise ContractViolation("morphism does not belong to this Hom module")
        return tuple(self._sq.coords(_flat(f.matrix.entries)))

    def morphism(self, coords) -> Morphism:
        out = Morphism.zero(self.source, self.target)
        for c, r in zip(coords, self.reps):
            if c:
                out = out + r * c
        return out


def _build_hom(M: Presentation, N: Presentation, extra_z=()):
    h, g = N.generators, M.generators
    W = morphism_lattice_generators(M, N)
    Z0 = vanishing_matrix_generators(M, N) + list(extra_z)
    sq = _lattice.Subquotient(W, Z0, h * g)
    H = _sq_presentation(M.ring, sq)
    reps = tuple(
        Morphism(M, N, Matrix([v[i * g:(i + 1) * g] for i in range(h)], M.ring, (h, g)), check=False)
        for v in sq.gens)
    return H, reps, sq


def hom_module(M: Presentation, N: Presentation) -> HomModule:
    _check_ring(M, N)
    H, reps, sq = _build_hom(M, N)
    return HomModule(M, N, H, reps, sq)


# --------------------------------------------------------------------------
# Kernels, cokernels, images


@dataclass(frozen=True, eq=False)
class Kernel:
    module: Presentation
    incl: Morphism
    _sq: _lattice.Subquotient = field(repr=False)

    def __iter__(self):
        return iter((self.module, self.incl))

    def coords(self, v) -> list:
        """Coordinates of an ambient vector of the source lying in the kernel."""
        return self._sq.coords(v)


@dataclass(frozen=True, eq=False)
class Cokernel:
    module: Presentation
    proj: Morphism

    def __iter__(self):
        return iter((self.module, self.proj))


def kernel(f: Morphism) -> Kernel:
    M, N = f.source, f.target
    g, h = M.generators, N.generators
    basis = N.lattice.basis
    F = f.matrix.entries
    if h == 0:
        W = _lattice.identity(g)
    else:
        total = g + len(basis)
        A = [list(F[i]) + [-b[i] for b in basis] for i in range(h)]
        W = [v[:g] for v in _lattice.kernel(A, h, total)]
    sq = _lattice.Subquotient(W, M.lattice.basis, g)
    K = _sq_presentation(M.ring, sq)
    k = K.generators
    incl = Matrix([[sq.gens[j][i] for j in range(k)] for i in range(g)], M.ring, (g, k))
    return Kernel(K, Morphism(K, M, incl, check=False), sq)


def cokernel(f: Morphism) -> Cokernel:
    M, N = f.source, f.target
    h = N.generators
    Z0 = list(N.lattice.basis) + [f.matrix.col(j) for j in range(M.generators)]
    sq = _lattice.Subquotient(_lattice.identity(h), Z0, h)
    C = _sq_presentation(N.ring, sq)
    cols = [sq.coords([int(i == j) for i in range(h)]) for j in range(h)]
    k = C.generators
    proj = Matrix([[cols[j][i] for j in range(h)] for i in range(k)], N.ring, (k, h))
    return Cokernel(C, Morphism(N, C, proj, check=False))


@dataclass(frozen=True, eq=False)
class Image:
    module: Presentation
    incl: Morphism
    epi: Morphism

    def __iter__(self):
        return iter((self.module, self.incl))


def image(f: Morphism) -> Image:
    """Image as ``kernel(cokernel(f).proj)`` together with the epi ``f = incl @ epi``."""
    ker = kernel(cokernel(f).proj)
    I, incl = ker.module, ker.incl
    k, g = I.generators, f.source.generators
    cols = [ker.coords(f.matrix.col(j)) for j in range(g)]
    epi = Matrix([[cols[j][i] for j in range(g)] for i in range(k)], f.source.ring, (k, g))
    return Image(I, incl, Morphism(f.source, I, epi, check=False))


def is_mono(f: Morphism) -> bool:
    return kernel(f).module.generators == 0


def is_epi(f: Morphism) -> bool:
    return cokernel(f).module.generators == 0


def is_iso(f: Morphism) -> bool:
    return is_mono(f) and is_epi(f)


def contains_submodule(big: Morphism, small: Morphism) -> bool:
    """Does the image of ``small`` lie inside the image of ``big`` (same target)?"""
    if big.target != small.target:
        raise ContractViolation("submodules of different modules")
    N = big.target
    lat = _lattice.Lattice(list(N.lattice.basis) + [big.matrix.col(j) for j in range(big.source.generators)],
                           N.generators)
    return all(small.matrix.col(j) in lat for j in range(small.source.generators))


# --------------------------------------------------------------------------
# Direct sums, pushouts, pullbacks


@dataclass(frozen=True, eq=False)
class DirectSum:
    module: Presentation
    injections: tuple
    projections: tuple

    def __iter__(self):
        return iter((self.module, self.injections, self.projections))


def direct_sum(M: Presentation, N: Presentation) -> DirectSum:
    _check_ring(M, N)
    ring = M.ring
    g, h = M.generators, N.generators
    S = Presentation(ring, g + h, Matrix.block_diag(M.relations, N.relations))
    iM = Matrix.identity(g, ring).vstack(Matrix.zeros(h, g, ring))
    iN = Matrix.zeros(g, h, ring).vstack(Matrix.identity(h, ring))
    pM = Matrix.identity(g, ring).hstack(Matrix.zeros(g, h, ring))
    pN = Matrix.zeros(h, g, ring).hstack(Matrix.identity(h, ring))
    return DirectSum(S,
                     (Morphism(M, S, iM, check=False), Morphism(N, S, iN, check=False)),
                     (Morphism(S, M, pM, check=False), Morphism(S, N, pN, check=False)))


def _unique_solution(res, what):
    if res is None:
        raise NoSolution(f"{what}: no compatible morphism exists")
    gamma, homog = res
    if homog:
        raise InternalConsistencyError(f"{what}: induced morphism is not unique")
    return gamma


@dataclass(frozen=True, eq=False)
class PushoutSquare:
    """``alpha: Y -> A``, ``beta: Y -> B`` completed by ``beta_bar: A -> PO``, ``alpha_bar: B -> PO``."""

    alpha: Morphism
    beta: Morphism
    module: Presentation
    alpha_bar: Morphism
    beta_bar: Morphism

    def __iter__(self):
        return iter((self.module, self.alpha_bar, self.beta_bar))

    def induce(self, beta_prime: Morphism, alpha_prime: Morphism, shuffle=None) -> Morphism:
        """The unique ``gamma: PO -> C`` with ``gamma @ beta_bar == beta_prime`` and ``gamma @ alpha_bar == alpha_prime``."""
        if beta_prime.target != alpha_prime.target:
            raise ContractViolation("cocone legs have different targets")
        if beta_prime @ self.alpha != alpha_prime @ self.beta:
            raise NoSolution("not a cocone: beta' alpha != alpha' beta")
        res = solve_morphism(self.module, beta_prime.target,
                             [(None, self.beta_bar, beta_prime), (None, self.alpha_bar, alpha_prime)],
                             shuffle=shuffle)
        return _unique_solution(res, "pushout")


def pushout(alpha: Morphism, beta: Morphism) -> PushoutSquare:
    """Pushout of ``alpha: Y -> A`` and ``beta: Y -> B``: ``(A + B) / {(alpha y, -beta y)}``."""
    if alpha.source != beta.source:
        raise ContractViolation("pushout needs a common source")
    A, B = alpha.target, beta.target
    S, (iA, iB), _ = direct_sum(A, B)
    diff = Morphism(alpha.source, S, alpha.matrix.vstack(-beta.matrix), check=False)
    PO, proj = cokernel(diff)
    return PushoutSquare(alpha, beta, PO, proj @ iB, proj @ iA)


@dataclass(frozen=True, eq=False)
class PullbackSquare:
    """``alpha: A -> X``, ``beta: B -> X`` completed by ``alpha_under: PB -> B``, ``beta_under: PB -> A``."""

    alpha: Morphism
    beta: Morphism
    module: Presentation
    alpha_under: Morphism
    beta_under: Morphism

    def __iter__(self):
        return iter((self.module, self.alpha_under, self.beta_under))

    def induce(self, alpha_prime: Morphism, beta_prime: Morphism, shuffle=None) -> Morphism:
        """The unique ``gamma: C -> PB`` with ``alpha_under @ gamma == alpha_prime`` and ``beta_under @ gamma == beta_prime``."""
        if alpha_prime.source != beta_prime.source:
            raise ContractViolation("cone legs have different sources")
        if self.beta @ alpha_prime != self.alpha @ beta_prime:
            raise NoSolution("not a cone: beta alpha' != alpha beta'")
        res = solve_morphism(alpha_prime.source, self.module,
                             [(self.alpha_under, None, alpha_prime), (self.beta_under, None, beta_prime)],
                             shuffle=shuffle)
        return _unique_solution(res, "pullback")


def pullback(alpha: Morphism, beta: Morphism) -> PullbackSquare:
    """Pullback of ``alpha: A -> X`` and ``beta: B -> X``: ``{(b, a) : beta b = alpha a}``."""
    if alpha.target != beta.target:
        raise ContractViolation("pullback needs a common target")
    A, B = alpha.source, beta.source
    S, _, (pB, pA) = direct_sum(B, A)
    diff = Morphism(S, alpha.target, beta.matrix.hstack(-alpha.matrix), check=False)
    PB, incl = kernel(diff)
    return PullbackSquare(alpha, beta, PB, pB @ incl, pA @ incl)


# --------------------------------------------------------------------------
# Projective and injective objects


def free_cover(M: Presentation) -> Morphism:
    """The canonical epimorphism from the free module on M's generators."""
    P = Presentation.free(M.ring, M.generators)
    return Morphism(P, M, Matrix.identity(M.generators, M.ring), check=False)


def is_projective(M: Presentation) -> bool:
    """Does the free cover of M admit a section?"""
    pi = free_cover(M)
    return solve_morphism(M, pi.source, [(pi, None, Morphism.identity(M))]) is not None


def projective_by_factors(M: Presentation) -> bool:
    """Invariant-factor criterion: free over Z; each factor d with gcd(d, n/d) = 1 over Z/n."""
    inv = canonical_decomposition(M)
    n = M.ring.modulus
    if n is None:
        return not inv.torsion
    return all(gcd(d, n // d) == 1 for d in inv.torsion)


def _require_self_injective(M: Presentation):
    if M.ring.is_integers:
        raise UnsupportedRing("finitely generated injective modules do not exist over Z; "
                              "injective-side operations need Z/n")


def embed_into_injective(M: Presentation) -> Morphism:
    """Embed M into a free (hence injective) ``Z/n``-module.

    Each invariant factor ``Z/d`` goes into a copy of ``Z/n`` by multiplication by ``n/d``.
    """
    _require_self_injective(M)
    n = M.ring.modulus
    s = simplify(M)
    k = s.module.generators
    D = Matrix([[n // d if i == j else 0 for j in range(k)] for i, d in enumerate(_factors(s.module))],
               M.ring, (k, k))
    E = Presentation.free(M.ring, k)
    return Morphism(M, E, D @ s.to_canonical.matrix, check=False)


def _factors(S: Presentation) -> list:
    # diagonal presentation -> factor per generator (n for a free Z/n summand)
    n = S.ring.modulus
    out = []
    for j in range(S.generators):
        d = 0
        for r in S.relations.entries:
            if r[j]:
                d = r[j]
        out.append(d if d else (n or 0))
    return out


def is_injective(M: Presentation) -> bool:
    """Does the embedding into an injective module admit a retraction?"""
    iota = embed_into_injective(M)
    return solve_morphism(iota.target, M, [(None, iota, Morphism.identity(M))]) is not None
