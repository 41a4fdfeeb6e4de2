"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (non-exact chain, ring
without the needed structure, ...), 2 on malformed input or bad usage.
"""
from __future__ import annotations

import argparse
import os
import random
import sys
from typing import Optional, Sequence

from . import serialization as io
from .dimensions import fd, id as injective_dim, pd
from .errors import HomAlgError, MalformedInput, NotExactAt
from .ext import are_equivalent, class_of, ext_module, splitting
from .gallery import SCENARIOS, gallery
from .les import les_contravariant, les_covariant
from .sequences import cut, splice, verify_exact


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _path(arg: str) -> str:
    # accept both "file.json" and "X=file.json"
    return arg.split("=", 1)[1] if "=" in arg and not os.path.exists(arg) else arg


def _module(arg):
    return io.load_module(_path(arg))


def _seq(arg):
    return io.load_sequence(_path(arg))


def _classes_json(cls):
    return {"n": cls.parent.n, "ext": str(cls.parent.invariants), "coords": list(cls.element),
            "zero": cls.is_zero()}


def cmd_ext(a):
    E = ext_module(a.n, _module(a.X), _module(a.Y))
    inv = E.invariants
    return {"n": a.n, "value": str(inv), "order": inv.order, "free_rank": inv.free_rank,
            "torsion": list(inv.torsion)}, str(inv)


def cmd_class(a):
    c = class_of(_seq(a.seq), perturb=a.seed if a.perturb else None)
    text = f"class {list(c.element)} in Ext^{c.parent.n} = {c.parent.invariants}" + (" (zero)" if c.is_zero() else "")
    return _classes_json(c), text


def cmd_equiv(a):
    eq = are_equivalent(_seq(a.seq1), _seq(a.seq2))
    return {"equivalent": eq}, "equivalent" if eq else "not equivalent"


def cmd_split(a):
    s = splitting(_seq(a.seq))
    if s is None:
        return {"splits": False}, "does not split"
    return ({"splits": True, "retraction": s.retraction.matrix.tolist(), "section": s.section.matrix.tolist()},
            f"splits\nretraction {s.retraction.matrix.tolist()}\nsection {s.section.matrix.tolist()}")


def _emit_seq(seq, out):
    doc = io.sequence_to_json(seq)
    if out:
        io.save_sequence(seq, out)
    return doc


def cmd_splice(a):
    S = splice(_seq(a.seq1), _seq(a.seq2))
    doc = _emit_seq(S, a.output)
    return doc, (f"wrote {a.output}" if a.output else io.dumps(doc))


def cmd_cut(a):
    L, R = cut(_seq(a.seq), a.i)
    out = {"left": io.sequence_to_json(L), "right": io.sequence_to_json(R)}
    if a.output:
        io.save_sequence(L, a.output + "_left.json")
        io.save_sequence(R, a.output + "_right.json")
        return out, f"wrote {a.output}_left.json and {a.output}_right.json"
    return out, io.dumps(out)


def _les_text(les):
    width = max(len(l) for l in les.labels)
    lines = [f"{les.kind} long exact sequence"]
    for lab, node, cert in zip(les.labels, les.nodes, les.certificates):
        lines.append(f"  {lab:<{width}}  {str(node.invariants):<20}  {cert.check}: {'ok' if cert.exact else 'FAIL'}")
    lines.append("exact" if les.exact else "NOT exact")
    return "\n".join(lines)


def cmd_les_cov(a):
    les = les_covariant(_seq(a.seq), _module(a.A), a.nmax)
    return les.to_json(), _les_text(les)


def cmd_les_con(a):
    les = les_contravariant(_seq(a.seq), _module(a.B), a.nmax)
    return les.to_json(), _les_text(les)


def _dim(fn):
    def run(a):
        d = fn(_module(a.X), a.max)
        return d.to_json(), str(d)
    return run


def cmd_verify(a):
    arrows = io.load_sequence_arrows(_path(a.seq))
    S = verify_exact(arrows)
    return {"exact": True, "length": S.length}, f"exact (length {S.length})"


def cmd_gallery(a):
    r = gallery(a.scenario, seed=a.seed)
    text = "\n".join(r.lines + [f"verdict: {'confirmed' if r.verdict else 'FAILED'}"])
    return r.to_json(), text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for random choices")
    p = _Parser(prog="yoneda-ext", description="Yoneda Ext over Z and Z/n")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("ext", parents=[common], help="Ext^n(X, Y)")
    s.add_argument("-n", type=int, default=1)
    s.add_argument("X")
    s.add_argument("Y")
    s.set_defaults(fn=cmd_ext)

    s = sub.add_parser("class", parents=[common], help="class of an n-exact sequence")
    s.add_argument("seq")
    s.add_argument("--perturb", action="store_true", help="randomize lifts (uses --seed)")
    s.set_defaults(fn=cmd_class)

    s = sub.add_parser("equiv", parents=[common], help="are two sequences equivalent")
    s.add_argument("seq1")
    s.add_argument("seq2")
    s.set_defaults(fn=cmd_equiv)

    s = sub.add_parser("split", parents=[common], help="splitting of a short exact sequence")
    s.add_argument("seq")
    s.set_defaults(fn=cmd_split)

    s = sub.add_parser("splice", parents=[common], help="splice E (ending at Z) with F (starting at Z)")
    s.add_argument("seq1")
    s.add_argument("seq2")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_splice)

    s = sub.add_parser("cut", parents=[common], help="cut a sequence at middle i")
    s.add_argument("seq")
    s.add_argument("-i", type=int, required=True)
    s.add_argument("-o", "--output", help="prefix for the two output files")
    s.set_defaults(fn=cmd_cut)

    for verb, fn, arg in (("les-cov", cmd_les_cov, "A"), ("les-con", cmd_les_con, "B")):
        s = sub.add_parser(verb, parents=[common], help=f"{verb.split('-')[1]}ariant long exact sequence")
        s.add_argument("seq")
        s.add_argument(arg)
        s.add_argument("--nmax", type=int, default=3)
        s.set_defaults(fn=fn)

    for verb, fn in (("pd", pd), ("id", injective_dim), ("fd", fd)):
        s = sub.add_parser(verb, parents=[common], help=f"{verb} of a module")
        s.add_argument("X")
        s.add_argument("--max", type=int, default=16)
        s.set_defaults(fn=_dim(fn))

    s = sub.add_parser("verify", parents=[common], help="check exactness of a chain")
    s.add_argument("seq")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("gallery", parents=[common], help="narrated scenario")
    s.add_argument("scenario", choices=sorted(SCENARIOS))
    s.set_defaults(fn=cmd_gallery)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    as_json = "--json" in (argv if argv is not None else sys.argv[1:])
    try:
        args = build_parser().parse_args(argv)
        doc, text = args.fn(args)
    except _Usage as exc:
        return _fail(err, out, as_json, "usage", str(exc), 2)
    except MalformedInput as exc:
        return _fail(err, out, as_json, "MalformedInput", str(exc), 2)
    except HomAlgError as exc:
        extra = {"index": exc.index} if isinstance(exc, NotExactAt) else {}
        name = f"NotExactAt({exc.index})" if isinstance(exc, NotExactAt) else type(exc).__name__
        return _fail(err, out, as_json, name, str(exc), 1, extra)
    if as_json:
        out.write(io.dumps(doc) + "\n")
    else:
        out.write(text + "\n")
    return 0


def _fail(err, out, as_json, kind, message, code, extra=None):
    if as_json:
        out.write(io.dumps({"error": kind, "message": message, **(extra or {})}) + "\n")
    else:
        err.write(f"error: {kind}: {message}\n")
    return code


def main():
    sys.exit(run())
