"""Covariant and contravariant long homology sequences with exactness certificates.

All connecting and induced maps are computed on representative sequences
(pushouts, pullbacks, splices) and then read back as module homomorphisms
between the computed Ext presentations.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractViolation, InternalConsistencyError
from .ext import ExtModule, class_of, ext_module, representative_sequence
from .modules import Morphism, Presentation, contains_submodule, is_mono, kernel
from .ring import Matrix
from .sequences import NExactSequence, pullback_sequence, pushout_sequence, splice


@dataclass(frozen=True)
class NodeCertificate:
    index: int
    label: str
    check: str
    exact: bool
    module: str

    def to_json(self):
        return {"index": self.index, "label": self.label, "check": self.check,
                "exact": self.exact, "module": self.module}


@dataclass(frozen=True, eq=False)
class LongExactSequence:
    kind: str
    nodes: tuple
    labels: tuple
    maps: tuple
    certificates: tuple = field(default=())

    @property
    def exact(self) -> bool:
        return all(c.exact for c in self.certificates)

    def to_json(self):
        return {
            "kind": self.kind,
            "nodes": [{"label": l, "module": str(e.value), "order": e.order}
                      for l, e in zip(self.labels, self.nodes)],
            "maps": [m.matrix.tolist() for m in self.maps],
            "certificates": [c.to_json() for c in self.certificates],
            "exact": self.exact,
        }


def _module_map(src: ExtModule, tgt: ExtModule, fn) -> Morphism:
    cols = []
    for j in range(len(src.reps)):
        e = [0] * len(src.reps)
        e[j] = 1
        img = fn(src.class_from_coords(e))
        p = img.parent
        if (p.n, p.X, p.Y) != (tgt.n, tgt.X, tgt.Y):
            raise InternalConsistencyError("induced class landed in the wrong Ext module")
        cols.append(img.element)
    k = tgt.value.generators
    mat = Matrix([[c[i] for c in cols] for i in range(k)], src.value.ring, (k, len(cols)))
    f = Morphism(src.value, tgt.value, mat, check=False)
    if not f.is_well_defined():
        raise InternalConsistencyError("induced map is not a module homomorphism")
    return f


def _certify(nodes, labels, maps):
    certs = []
    for i, node in enumerate(nodes[:-1]):
        if i == 0:
            ok = is_mono(maps[0])
            check = "mono"
        else:
            a, b = maps[i - 1], maps[i]
            ok = (b @ a).is_zero() and contains_submodule(a, kernel(b).incl)
            check = "image=kernel"
        certs.append(NodeCertificate(i, labels[i], check, ok, str(node.value)))
    return tuple(certs)


def _finish(kind, nodes, labels, maps, verify):
    certs = _certify(nodes, labels, maps)
    les = LongExactSequence(kind, tuple(nodes), tuple(labels), tuple(maps), certs)
    if verify and not les.exact:
        bad = [c.label for c in certs if not c.exact]
        raise InternalConsistencyError(f"{kind} long sequence not exact at {bad}")
    return les


def _short(Zseq: NExactSequence):
    if Zseq.length != 1:
        raise ContractViolation("long sequences are attached to short exact sequences")
    return Zseq.arrows


def les_covariant(Zseq: NExactSequence, A: Presentation, n_max: int, verify: bool = True) -> LongExactSequence:
    """``0 -> Hom(A,Y) -> Hom(A,Z) -> Hom(A,X) -> Ext^1(A,Y) -> ... -> Ext^n_max(A,X)``."""
    iota, pi = _short(Zseq)
    if n_max < 1:
        raise ContractViolation("n_max must be >= 1")
    if A.ring != Zseq.ring:
        raise ContractViolation("A lives over a different ring")
    Y, Zm, X = Zseq.modules
    nodes, labels, maps = [], [], []
    for k in range(n_max + 1):
        name = "Hom" if k == 0 else f"Ext^{k}"
        row = [ext_module(k, A, M) for M in (Y, Zm, X)]
        if k == 0:
            push_i = lambda c, t=row[1]: t.class_from_witness(iota @ c.witness)
            push_p = lambda c, t=row[2]: t.class_from_witness(pi @ c.witness)
        else:
            push_i = lambda c: class_of(pushout_sequence(iota, representative_sequence(c)))
            push_p = lambda c: class_of(pushout_sequence(pi, representative_sequence(c)))
        if k > 0:
            prev = nodes[-1]
            if k == 1:
                conn = lambda c: class_of(pullback_sequence(Zseq, c.witness))
            else:
                conn = lambda c: class_of(splice(Zseq, representative_sequence(c)))
            maps.append(_module_map(prev, row[0], conn))
        maps.append(_module_map(row[0], row[1], push_i))
        maps.append(_module_map(row[1], row[2], push_p))
        nodes.extend(row)
        labels.extend(f"{name}(A,{s})" for s in ("Y", "Z", "X"))
    return _finish("covariant", nodes, labels, maps, verify)


def les_contravariant(Zseq: NExactSequence, B: Presentation, n_max: int, verify: bool = True) -> LongExactSequence:
    """``0 -> Hom(X,B) -> Hom(Z,B) -> Hom(Y,B) -> Ext^1(X,B) -> ... -> Ext^n_max(Y,B)``."""
    iota, pi = _short(Zseq)
    if n_max < 1:
        raise ContractViolation("n_max must be >= 1")
    if B.ring != Zseq.ring:
        raise ContractViolation("B lives over a different ring")
    Y, Zm, X = Zseq.modules
    nodes, labels, maps = [], [], []
    for k in range(n_max + 1):
        name = "Hom" if k == 0 else f"Ext^{k}"
        row = [ext_module(k, M, B) for M in (X, Zm, Y)]
        if k == 0:
            pull_p = lambda c, t=row[1]: t.class_from_witness(c.witness @ pi)
            pull_i = lambda c, t=row[2]: t.class_from_witness(c.witness @ iota)
        else:
            pull_p = lambda c: class_of(pullback_sequence(representative_sequence(c), pi))
            pull_i = lambda c: class_of(pullback_sequence(representative_sequence(c), iota))
        if k > 0:
            prev = nodes[-1]
            if k == 1:
                conn = lambda c: class_of(pushout_sequence(c.witness, Zseq))
            else:
                conn = lambda c: class_of(splice(representative_sequence(c), Zseq))
            maps.append(_module_map(prev, row[0], conn))
        maps.append(_module_map(row[0], row[1], pull_p))
        maps.append(_module_map(row[1], row[2], pull_i))
        nodes.extend(row)
        labels.extend(f"{name}({s},B)" for s in ("X", "Z", "Y"))
    return _finish("contravariant", nodes, labels, maps, verify)
