"""n-exact sequences and their algebra: splice, cut, pushout and pullback."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ContractViolation, InternalConsistencyError, NotEpi, NotExactAt, NotMono
from .modules import (
    Morphism,
    Presentation,
    contains_submodule,
    direct_sum,
    is_epi,
    is_mono,
    kernel,
    lift,
    pullback,
    pushout,
)


class NExactSequence:
    """``0 -> Y -> E_1 -> ... -> E_n -> X -> 0`` given by its ``n + 1`` arrows.

    Instances are only produced by :func:`verify_exact` (or operations that
    call it), so holding one means the chain has been checked.
    """

    __slots__ = ("arrows",)

    def __init__(self, arrows, _verified=False):
        if not _verified:
            raise TypeError("use verify_exact() to build an NExactSequence")
        object.__setattr__(self, "arrows", tuple(arrows))

    def __setattr__(self, name, value):
        raise AttributeError("NExactSequence is immutable")

    @property
    def length(self) -> int:
        return len(self.arrows) - 1

    @property
    def left(self) -> Presentation:
        return self.arrows[0].source

    @property
    def right(self) -> Presentation:
        return self.arrows[-1].target

    @property
    def middles(self) -> tuple:
        return tuple(f.target for f in self.arrows[:-1])

    @property
    def modules(self) -> tuple:
        return (self.left,) + self.middles + (self.right,)

    @property
    def ring(self):
        return self.left.ring

    def __eq__(self, other):
        if not isinstance(other, NExactSequence):
            return NotImplemented
        return len(self.arrows) == len(other.arrows) and all(
            f == g for f, g in zip(self.arrows, other.arrows))

    def __hash__(self):
        return hash(self.modules)

    def __repr__(self):
        return f"NExactSequence(length={self.length}, modules={[str(m) for m in self.modules]})"


def verify_exact(arrows: Sequence[Morphism]) -> NExactSequence:
    """Validate a chain ``f_0, ..., f_n`` and wrap it as an n-exact sequence.

    Raises :class:`NotMono`, :class:`NotExactAt` (first failing middle,
    1-based) or :class:`NotEpi`.
    """
    arrows = tuple(arrows)
    if len(arrows) < 2:
        raise ContractViolation("an n-exact sequence needs n >= 1 middle modules")
    for i in range(len(arrows) - 1):
        if arrows[i].target != arrows[i + 1].source:
            raise ContractViolation(f"arrows {i} and {i + 1} do not compose")
    if not is_mono(arrows[0]):
        raise NotMono()
    for i in range(1, len(arrows)):
        f, g = arrows[i - 1], arrows[i]
        if not (g @ f).is_zero():
            raise NotExactAt(i)
        if not contains_submodule(f, kernel(g).incl):
            raise NotExactAt(i)
    if not is_epi(arrows[-1]):
        raise NotEpi()
    return NExactSequence(arrows, _verified=True)


def short_exact(i: Morphism, p: Morphism) -> NExactSequence:
    return verify_exact((i, p))


def zero_sequence(n: int, Y: Presentation, X: Presentation) -> NExactSequence:
    """Representative of the zero class of ``Ext^n(X, Y)``.

    n = 1 is the direct-sum sequence; for n >= 2 the chain is
    ``Y = Y -> 0 -> ... -> 0 -> X = X`` with zero modules padding the
    interior slots so the length is exactly n.
    """
    if n < 1:
        raise ContractViolation("length must be >= 1")
    if Y.ring != X.ring:
        raise ContractViolation("ends live over different rings")
    if n == 1:
        S, (iY, _), (_, pX) = direct_sum(Y, X)
        return verify_exact((iY, pX))
    zero = Presentation.zero(Y.ring)
    middles = [Y] + [zero] * (n - 2) + [X]
    arrows = [Morphism.identity(Y)]
    for a, b in zip(middles, middles[1:]):
        arrows.append(Morphism.zero(a, b))
    arrows.append(Morphism.identity(X))
    return verify_exact(arrows)


def splice(E: NExactSequence, F: NExactSequence) -> NExactSequence:
    """Join ``E`` (ending at Z) and ``F`` (starting at Z) into one sequence."""
    if E.right != F.left:
        raise ContractViolation("splice needs E.right_end == F.left_end")
    joined = E.arrows[:-1] + (F.arrows[0] @ E.arrows[-1],) + F.arrows[1:]
    return verify_exact(joined)


def cut(F: NExactSequence, i: int):
    """Cut at the middle ``F_i`` (``1 < i <= n``) into ``(L, R)`` with ``splice(L, R) == F``."""
    n = F.length
    if not (1 < i <= n):
        raise ContractViolation(f"cut index must satisfy 1 < i <= {n}, got {i}")
    f_prev, f_i = F.arrows[i - 1], F.arrows[i]
    ker = kernel(f_i)
    Z, incl = ker.module, ker.incl
    corestricted = lift(f_prev, incl)
    if corestricted is None:
        raise InternalConsistencyError("image of f_{i-1} is not inside ker f_i")
    L = verify_exact(F.arrows[:i - 1] + (corestricted,))
    R = verify_exact((incl,) + F.arrows[i:])
    return L, R


@dataclass(frozen=True, eq=False)
class SequenceMorphism:
    """Commuting ladder between two sequences of equal length.

    ``components`` is ``(phi_minus, phi_1, ..., phi_n, phi_plus)``.
    """

    source: NExactSequence
    target: NExactSequence
    components: tuple

    def __post_init__(self):
        if self.source.length != self.target.length:
            raise ContractViolation("sequences of different length")
        if len(self.components) != self.source.length + 2:
            raise ContractViolation("wrong number of components")
        for k, (f, g) in enumerate(zip(self.source.arrows, self.target.arrows)):
            if g @ self.components[k] != self.components[k + 1] @ f:
                raise ContractViolation(f"square {k} does not commute")


def pushout_ladder(beta: Morphism, F: NExactSequence) -> SequenceMorphism:
    """The canonical morphism ``F -> beta F`` for ``beta: Y -> B``."""
    if beta.source != F.left:
        raise ContractViolation("beta must start at the left end of F")
    f0, f1 = F.arrows[0], F.arrows[1]
    sq = pushout(f0, beta)
    f1_bar = sq.induce(f1, Morphism.zero(beta.target, f1.target))
    lower = verify_exact((sq.alpha_bar, f1_bar) + F.arrows[2:])
    comps = (beta, sq.beta_bar) + tuple(Morphism.identity(M) for M in F.modules[2:])
    return SequenceMorphism(F, lower, comps)


def pushout_sequence(beta: Morphism, F: NExactSequence) -> NExactSequence:
    return pushout_ladder(beta, F).target


def pullback_ladder(F: NExactSequence, alpha: Morphism) -> SequenceMorphism:
    """The canonical morphism ``F alpha -> F`` for ``alpha: A -> X``."""
    if alpha.target != F.right:
        raise ContractViolation("alpha must end at the right end of F")
    fn, fprev = F.arrows[-1], F.arrows[-2]
    sq = pullback(alpha, fn)
    fprev_under = sq.induce(fprev, Morphism.zero(fprev.source, alpha.source))
    upper = verify_exact(F.arrows[:-2] + (fprev_under, sq.beta_under))
    comps = tuple(Morphism.identity(M) for M in F.modules[:-2]) + (sq.alpha_under, alpha)
    return SequenceMorphism(upper, F, comps)


def pullback_sequence(F: NExactSequence, alpha: Morphism) -> NExactSequence:
    return pullback_ladder(F, alpha).source


def reglue(F: NExactSequence, left: Optional[Morphism] = None,
           right: Optional[Morphism] = None) -> NExactSequence:
    """Swap an end for an isomorphic copy.

    ``left: Y' -> Y`` and ``right: X -> X'`` must be isomorphisms; the result
    has ends ``Y'`` / ``X'``.
    """
    from .modules import is_iso

    arrows = list(F.arrows)
    if left is not None:
        if left.target != F.left or not is_iso(left):
            raise ContractViolation("left reglue map must be an isomorphism onto Y")
        arrows[0] = arrows[0] @ left
    if right is not None:
        if right.source != F.right or not is_iso(right):
            raise ContractViolation("right reglue map must be an isomorphism out of X")
        arrows[-1] = right @ arrows[-1]
    return verify_exact(arrows)
