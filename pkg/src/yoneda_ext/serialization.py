"""JSON formats for modules, morphisms and sequences.

Module::

    {"ring": "Z" | {"Zmod": n}, "generators": g, "relations": [[...], ...]}

Relations are rows of length ``g``.  A morphism file names its two modules
(inline objects or paths relative to the file) and gives ``"matrix"`` with
one row per target generator.  A sequence file lists its modules in order
and one matrix per arrow; it is checked with :func:`verify_exact` on load.
"""
from __future__ import annotations

import json
import os
from typing import Any, Optional

from .errors import ContractViolation, MalformedInput
from .modules import Morphism, Presentation
from .ring import ZZ, RingSpec, Zmod
from .sequences import NExactSequence, verify_exact


def ring_to_json(ring: RingSpec):
    return "Z" if ring.is_integers else {"Zmod": ring.modulus}


def ring_from_json(obj) -> RingSpec:
    if obj == "Z":
        return ZZ
    if isinstance(obj, dict) and set(obj) == {"Zmod"}:
        n = obj["Zmod"]
        if isinstance(n, int) and not isinstance(n, bool):
            try:
                return Zmod(n)
            except ContractViolation as exc:
                raise MalformedInput(str(exc)) from None
    raise MalformedInput(f'ring must be "Z" or {{"Zmod": n}}, got {obj!r}')


def _int_rows(rows, width: Optional[int], what: str):
    if not isinstance(rows, list):
        raise MalformedInput(f"{what} must be a list of rows")
    out = []
    for r in rows:
        if not isinstance(r, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in r):
            raise MalformedInput(f"{what} rows must be lists of integers")
        if width is not None and len(r) != width:
            raise MalformedInput(f"{what} row {r} has length {len(r)}, expected {width}")
        out.append(r)
    return out


def module_to_json(M: Presentation) -> dict:
    return {"ring": ring_to_json(M.ring), "generators": M.generators,
            "relations": M.relations.tolist()}


def module_from_json(obj) -> Presentation:
    if not isinstance(obj, dict):
        raise MalformedInput("module document must be a JSON object")
    missing = {"ring", "generators"} - set(obj)
    if missing:
        raise MalformedInput(f"module document lacks {sorted(missing)}")
    ring = ring_from_json(obj["ring"])
    g = obj["generators"]
    if not isinstance(g, int) or isinstance(g, bool) or g < 0:
        raise MalformedInput("generators must be a non-negative integer")
    rows = _int_rows(obj.get("relations", []), g, "relations")
    return Presentation(ring, g, rows)


def _read(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise MalformedInput(f"{path}: cannot read ({exc.strerror})") from None


def _write(path: str, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def _module_ref(ref, base: str) -> Presentation:
    if isinstance(ref, str):
        return load_module(os.path.join(base, ref))
    return module_from_json(ref)


def load_module(path: str) -> Presentation:
    return module_from_json(_read(path))


def save_module(M: Presentation, path: str):
    _write(path, module_to_json(M))


def morphism_to_json(f: Morphism) -> dict:
    return {"source": module_to_json(f.source), "target": module_to_json(f.target),
            "matrix": f.matrix.tolist()}


def morphism_from_json(obj, base: str = ".") -> Morphism:
    if not isinstance(obj, dict) or not {"source", "target", "matrix"} <= set(obj):
        raise MalformedInput("morphism document needs source, target and matrix")
    S = _module_ref(obj["source"], base)
    T = _module_ref(obj["target"], base)
    rows = _int_rows(obj["matrix"], S.generators, "matrix")
    if len(rows) != T.generators:
        raise MalformedInput(f"matrix has {len(rows)} rows, target has {T.generators} generators")
    try:
        return Morphism(S, T, rows)
    except ContractViolation as exc:
        raise MalformedInput(str(exc)) from None


def load_morphism(path: str) -> Morphism:
    return morphism_from_json(_read(path), os.path.dirname(path) or ".")


def sequence_to_json(seq: NExactSequence) -> dict:
    return {"modules": [module_to_json(M) for M in seq.modules],
            "arrows": [f.matrix.tolist() for f in seq.arrows]}


def sequence_arrows_from_json(obj, base: str = ".") -> list:
    """Parse the arrows without checking exactness."""
    if not isinstance(obj, dict) or not {"modules", "arrows"} <= set(obj):
        raise MalformedInput("sequence document needs modules and arrows")
    mods, arrows = obj["modules"], obj["arrows"]
    if not isinstance(mods, list) or not isinstance(arrows, list):
        raise MalformedInput("modules and arrows must be lists")
    if len(mods) < 3 or len(arrows) != len(mods) - 1:
        raise MalformedInput("a sequence needs k >= 3 modules and k - 1 arrows")
    mods = [_module_ref(m, base) for m in mods]
    if len({m.ring for m in mods}) > 1:
        raise MalformedInput("sequence modules live over different rings")
    out = []
    for i, rows in enumerate(arrows):
        S, T = mods[i], mods[i + 1]
        rows = _int_rows(rows, S.generators, f"arrow {i}")
        if len(rows) != T.generators:
            raise MalformedInput(f"arrow {i} has {len(rows)} rows, expected {T.generators}")
        try:
            out.append(Morphism(S, T, rows))
        except ContractViolation as exc:
            raise MalformedInput(f"arrow {i}: {exc}") from None
    return out


def sequence_from_json(obj, base: str = ".") -> NExactSequence:
    return verify_exact(sequence_arrows_from_json(obj, base))


def load_sequence_arrows(path: str) -> list:
    return sequence_arrows_from_json(_read(path), os.path.dirname(path) or ".")


def load_sequence(path: str) -> NExactSequence:
    return verify_exact(load_sequence_arrows(path))


def save_sequence(seq: NExactSequence, path: str):
    _write(path, sequence_to_json(seq))


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
