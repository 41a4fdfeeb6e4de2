"""Projective, injective and flat dimension by walking (co)syzygy towers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import _lattice
from .errors import ContractViolation
from .ext import syzygy_tower
from .modules import (
    Morphism,
    Presentation,
    _require_self_injective,
    _sq_presentation,
    canonical_decomposition,
    cokernel,
    embed_into_injective,
    hom_module,
    is_injective,
    is_projective,
    morphism_lattice_generators,
    vanishing_matrix_generators,
)


@dataclass(frozen=True)
class Dimension:
    """``kind`` is ``"finite"``, ``"infinite"`` or ``"at_least"``.

    For ``infinite`` the witness ``(i, j)`` records two isomorphic,
    non-projective (resp. non-injective) terms of the tower; ``period`` is
    ``j - i``.
    """

    kind: str
    value: Optional[int] = None
    period: Optional[int] = None
    witness: Optional[tuple] = None
    note: Optional[str] = None

    def __str__(self):
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "infinite":
            return f"infinite (period {self.period})"
        return f">= {self.value}"

    def to_json(self):
        out = {"kind": self.kind, "value": self.value, "period": self.period,
               "witness": list(self.witness) if self.witness else None}
        if self.note:
            out["note"] = self.note
        return out


def _walk(terms, test, max_steps):
    """Shared walk; ``terms(k)`` gives the k-th (co)syzygy, ``test`` decides (co)projectivity."""
    if max_steps < 1:
        raise ContractViolation("max_steps must be >= 1")
    if test(terms(0)):
        return Dimension("finite", 0)
    seen = {}
    for k in range(1, max_steps + 1):
        M = terms(k)
        if test(M):
            return Dimension("finite", k)
        key = canonical_decomposition(M)
        if key in seen:
            i = seen[key]
            return Dimension("infinite", period=k - i, witness=(i, k))
        seen[key] = k
    return Dimension("at_least", max_steps + 1)


def pd(X: Presentation, max_steps: int = 16) -> Dimension:
    return _walk(lambda k: syzygy_tower(X, k).kappa(k), is_projective, max_steps)


@dataclass(frozen=True, eq=False)
class InjectivePresentation:
    """``0 -> Y -> I -> c kappa(Y) -> 0`` with ``I`` free over ``Z/n``."""

    Y: Presentation
    I: Presentation
    iota: Morphism
    ckappa: Presentation
    pi: Morphism


@lru_cache(maxsize=2048)
def injective_presentation(Y: Presentation) -> InjectivePresentation:
    iota = embed_into_injective(Y)
    C, pi = cokernel(iota)
    return InjectivePresentation(Y, iota.target, iota, C, pi)


@lru_cache(maxsize=2048)
def cosyzygy(Y: Presentation, k: int) -> Presentation:
    """``c kappa^k(Y)`` (``k = 0`` gives Y)."""
    _require_self_injective(Y)
    return Y if k == 0 else injective_presentation(cosyzygy(Y, k - 1)).ckappa


def id(Y: Presentation, max_steps: int = 16) -> Dimension:  # noqa: A001 - mirrors pd/fd naming
    _require_self_injective(Y)
    return _walk(lambda k: cosyzygy(Y, k), is_injective, max_steps)


injective_dimension = id


def fd(X: Presentation, max_steps: int = 16) -> Dimension:
    """Flat dimension; finitely presented flat modules over Z and Z/n are projective, so fd = pd."""
    d = pd(X, max_steps)
    return Dimension(d.kind, d.value, d.period, d.witness,
                     note="fd = pd: finitely presented flat modules over Z and Z/n are projective")


def ext_via_injectives(n: int, X: Presentation, Y: Presentation) -> Presentation:
    """``Hom(X, c kappa^n Y) / pi_*[Hom(X, I_n)]`` computed from the cosyzygy side.

    Independent of the projective route; over ``Z/n`` both must agree.
    """
    if n < 1:
        raise ContractViolation("n must be >= 1")
    pres = injective_presentation(cosyzygy(Y, n - 1))
    C, pi = pres.ckappa, pres.pi
    h, g = C.generators, X.generators
    extra = []
    for r in hom_module(X, pres.I).reps:
        m = (pi @ r).matrix.entries
        extra.append([x for row in m for x in row])
    W = morphism_lattice_generators(X, C)
    Z0 = vanishing_matrix_generators(X, C) + extra
    sq = _lattice.Subquotient(W, Z0, h * g)
    return _sq_presentation(X.ring, sq)
