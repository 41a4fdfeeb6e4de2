"""Ext^n as a quotient of Hom(kappa^n X, Y), and classes of n-exact sequences.

Projective presentations are fixed once and for all: ``P`` is free on the
generators of ``X``, ``pi`` is the identity matrix, and ``kappa(X)`` is the
kernel in canonical diagonal form.  This makes every syzygy and every
:class:`ExtModule` reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import _lattice
from .errors import ContractViolation, InternalConsistencyError, NoSolution
from .modules import (
    Morphism,
    Presentation,
    _build_hom,
    canonical_decomposition,
    free_cover,
    kernel,
    solve_morphism,
)
from .ring import Matrix
from .sequences import NExactSequence, pushout_sequence, splice, verify_exact


@dataclass(frozen=True, eq=False)
class ProjectivePresentation:
    """``0 -> kappa -> P -> X -> 0`` with ``P`` free on X's generators."""

    X: Presentation
    P: Presentation
    pi: Morphism
    kappa: Presentation
    iota: Morphism

    def as_sequence(self) -> NExactSequence:
        return verify_exact((self.iota, self.pi))


@lru_cache(maxsize=4096)
def projective_presentation(X: Presentation) -> ProjectivePresentation:
    pi = free_cover(X)
    K, iota = kernel(pi)
    return ProjectivePresentation(X, pi.source, pi, K, iota)


@dataclass(frozen=True, eq=False)
class SyzygyTower:
    """Stages ``0 -> kappa^k -> P_k -> kappa^(k-1) -> 0`` for ``k = 1..depth``."""

    X: Presentation
    stages: tuple

    @property
    def depth(self) -> int:
        return len(self.stages)

    def kappa(self, k: int) -> Presentation:
        """``kappa^k X`` (``kappa^0 X = X``)."""
        return self.X if k == 0 else self.stages[k - 1].kappa

    @property
    def kernels(self) -> tuple:
        return tuple(s.kappa for s in self.stages)

    @property
    def frees(self) -> tuple:
        return tuple(s.P for s in self.stages)

    def resolution(self) -> NExactSequence:
        """``0 -> kappa^n -> P_n -> ... -> P_1 -> X -> 0`` by successive splicing."""
        if not self.stages:
            raise ContractViolation("empty tower has no resolution")
        return _resolution(self.X, self.depth)


@lru_cache(maxsize=2048)
def _resolution(X, n):
    tower = syzygy_tower(X, n)
    seq = tower.stages[0].as_sequence()
    for stage in tower.stages[1:]:
        seq = splice(stage.as_sequence(), seq)
    return seq


@lru_cache(maxsize=2048)
def syzygy_tower(X: Presentation, n: int) -> SyzygyTower:
    if n < 0:
        raise ContractViolation("depth must be >= 0")
    if n == 0:
        return SyzygyTower(X, ())
    prev = syzygy_tower(X, n - 1)
    stage = projective_presentation(prev.kappa(n - 1))
    return SyzygyTower(X, prev.stages + (stage,))


@dataclass(frozen=True, eq=False)
class ExtModule:
    """``Ext^n(X, Y) = Hom(kappa^n X, Y) / restrictions of Hom(P_n, Y)``.

    For n = 0 this is ``Hom(X, Y)``.  ``reps[j]`` is a morphism
    ``kappa^n X -> Y`` representing the j-th generator of :attr:`value`.
    """

    n: int
    X: Presentation
    Y: Presentation
    value: Presentation
    reps: tuple
    tower: SyzygyTower
    _sq: _lattice.Subquotient = field(repr=False)

    @property
    def domain(self) -> Presentation:
        return self.tower.kappa(self.n)

    @property
    def invariants(self):
        return canonical_decomposition(self.value)

    @property
    def order(self) -> Optional[int]:
        return self.invariants.order

    def is_zero(self) -> bool:
        return self.value.generators == 0

    def element(self, u: Morphism) -> tuple:
        """Reduced coordinates of the class of ``u: kappa^n X -> Y``."""
        if u.source != self.domain or u.target != self.Y:
            raise ContractViolation("witness has the wrong endpoints")
        return tuple(self._sq.coords([x for row in u.matrix.entries for x in row]))

    def witness(self, coords) -> Morphism:
        coords = tuple(coords)
        if len(coords) != len(self.reps):
            raise ContractViolation("coordinate vector has the wrong length")
        out = Morphism.zero(self.domain, self.Y)
        for c, r in zip(coords, self.reps):
            if c:
                out = out + r * c
        return out

    def reduce(self, coords) -> tuple:
        return self.element(self.witness(coords))

    def class_from_witness(self, u: Morphism) -> "ExtClass":
        return ExtClass(self, self.element(u), u)

    def class_from_coords(self, coords) -> "ExtClass":
        u = self.witness(coords)
        return ExtClass(self, self.element(u), u)

    def zero(self) -> "ExtClass":
        return self.class_from_coords([0] * len(self.reps))

    def random_class(self, rng: random.Random, bound: int = 5) -> "ExtClass":
        coords = []
        for d in self._sq.factors:
            coords.append(rng.randrange(d) if d else rng.randint(-bound, bound))
        return self.class_from_coords(coords)

    def elements(self):
        """All classes (finite modules only)."""
        import itertools

        if self.order is None:
            raise ContractViolation("Ext module is infinite")
        for coords in itertools.product(*(range(d) for d in self._sq.factors)):
            yield self.class_from_coords(coords)


@dataclass(frozen=True, eq=False)
class ExtClass:
    parent: ExtModule
    element: tuple
    witness: Morphism

    def is_zero(self) -> bool:
        return not any(self.element)

    def __eq__(self, other):
        if not isinstance(other, ExtClass):
            return NotImplemented
        p, q = self.parent, other.parent
        return (p.n, p.X, p.Y) == (q.n, q.X, q.Y) and self.element == other.element

    def __hash__(self):
        return hash((self.parent.n, self.element))


@lru_cache(maxsize=4096)
def ext_module(n: int, X: Presentation, Y: Presentation) -> ExtModule:
    if n < 0:
        raise ContractViolation("n must be >= 0")
    if X.ring != Y.ring:
        raise ContractViolation("X and Y live over different rings")
    tower = syzygy_tower(X, n)
    D = tower.kappa(n)
    extra = []
    if n >= 1:
        iota = tower.stages[n - 1].iota.matrix.entries
        h, g = Y.generators, D.generators
        for a in range(h):
            for b in range(len(iota)):
                mat = [0] * (h * g)
                mat[a * g:(a + 1) * g] = iota[b]
                extra.append(mat)
    value, reps, sq = _build_hom(D, Y, extra)
    return ExtModule(n, X, Y, value, reps, tower, sq)


def _perturb(sol, rng):
    h, homog = sol
    for m in homog:
        c = rng.randint(-3, 3)
        if c:
            h = h + m * c
    return h


def class_of(E: NExactSequence, perturb: Optional[int] = None) -> ExtClass:
    """Class of ``E`` in ``Ext^n(X, Y)`` by lifting the fixed resolution of X into E.

    With ``perturb`` set, every intermediate lift is moved by a random
    homogeneous solution (seeded); the resulting class must not change.
    """
    n = E.length
    X, Y = E.right, E.left
    parent = ext_module(n, X, Y)
    tower = parent.tower
    rng = random.Random(perturb) if perturb is not None else None
    # targets T_k: T_0 = X, T_1 = E_n, ..., T_n = E_1, T_{n+1} = Y; t_k: T_k -> T_{k-1}
    arrows = E.arrows
    psi = Morphism.identity(X)
    for k in range(1, n + 1):
        stage = tower.stages[k - 1]
        t_k = arrows[n - k + 1]
        rhs = psi @ stage.pi
        sol = solve_morphism(stage.P, t_k.source, [(t_k, None, rhs)])
        if sol is None:
            raise InternalConsistencyError(f"lifting step {k} failed; free modules are projective")
        phi = _perturb(sol, rng) if rng else sol[0]
        psi = phi @ stage.iota
    f0 = arrows[0]
    sol = solve_morphism(tower.kappa(n), Y, [(f0, None, psi)])
    if sol is None:
        raise InternalConsistencyError("final ladder map does not factor through the mono Y -> E_1")
    u = sol[0]
    return ExtClass(parent, parent.element(u), u)


def representative_sequence(cls: ExtClass) -> NExactSequence:
    """An n-exact sequence of class ``cls``: the resolution pushed out along the witness."""
    n = cls.parent.n
    if n < 1:
        raise ContractViolation("Hom elements are not represented by exact sequences")
    return pushout_sequence(cls.witness, cls.parent.tower.resolution())


def is_zero_class(E: NExactSequence) -> bool:
    return class_of(E).is_zero()


def are_equivalent(E: NExactSequence, F: NExactSequence) -> bool:
    if E.left != F.left or E.right != F.right:
        raise ContractViolation("sequences have different ends")
    if E.length != F.length:
        raise ContractViolation("sequences have different lengths")
    return class_of(E).element == class_of(F).element


@dataclass(frozen=True, eq=False)
class Splitting:
    retraction: Morphism
    section: Morphism

    def __iter__(self):
        return iter((self.retraction, self.section))


def splitting(E: NExactSequence) -> Optional[Splitting]:
    """Retraction ``r`` (``r iota = 1_Y``) and section ``s`` (``pi s = 1_X``) if E splits.

    Both sides are solved independently and cross-checked against the class.
    """
    if E.length != 1:
        raise ContractViolation("splitting is defined for short exact sequences")
    iota, pi = E.arrows
    Y, M, X = E.modules
    r = solve_morphism(M, Y, [(None, iota, Morphism.identity(Y))])
    s = solve_morphism(X, M, [(pi, None, Morphism.identity(X))])
    zero = class_of(E).is_zero()
    if (r is None) != (s is None) or (r is None) == zero:
        raise InternalConsistencyError("retraction, section and Ext class disagree on splitting")
    if r is None:
        return None
    return Splitting(r[0], s[0])


def lift_along(g: Morphism, p: Morphism) -> Morphism:
    """Lift ``g`` through the epimorphism ``p``; raises if impossible."""
    sol = solve_morphism(g.source, p.source, [(p, None, g)])
    if sol is None:
        raise NoSolution("morphism does not lift")
    return sol[0]


def induced_map(cls: ExtClass, beta: Morphism) -> ExtClass:
    """Covariant action ``beta_*`` on a class, computed on witnesses: ``beta o u``."""
    parent = ext_module(cls.parent.n, cls.parent.X, beta.target)
    return parent.class_from_witness(beta @ cls.witness)


def module_matrix_on(reps, images, target_module, ring) -> Matrix:
    """Matrix of a module homomorphism from generator images (coordinate tuples)."""
    k = target_module.generators
    return Matrix([[img[i] for img in images] for i in range(k)], ring, (k, len(reps)))
