"""Base rings, exact matrices and integer linear algebra.

Two rings are supported: the integers and the integers modulo ``n``.  Linear
algebra over ``Z/n`` is done by lifting to the integers and appending ``n*I``,
so a single Smith-form routine serves both.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _lattice
from .errors import ContractViolation, RingMismatch


@dataclass(frozen=True)
class RingSpec:
    """``modulus=None`` is the integers, otherwise ``Z/modulus``."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None:
            if not isinstance(self.modulus, int) or isinstance(self.modulus, bool):
                raise ContractViolation("modulus must be an int")
            if self.modulus < 2:
                raise ContractViolation(f"IntegersMod(n) requires n >= 2, got {self.modulus}")

    @property
    def is_integers(self) -> bool:
        return self.modulus is None

    def reduce(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    def __str__(self):
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


ZZ = RingSpec()


def Zmod(n: int) -> RingSpec:
    return RingSpec(n)


@dataclass(frozen=True)
class RingElement:
    value: int
    ring: RingSpec = ZZ

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.reduce(int(self.value)))

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        return int(other)

    def __add__(self, other):
        return RingElement(self.value + self._other(other), self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.value - self._other(other), self.ring)

    def __rsub__(self, other):
        return RingElement(self._other(other) - self.value, self.ring)

    def __mul__(self, other):
        return RingElement(self.value * self._other(other), self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(-self.value, self.ring)

    def __int__(self):
        return self.value


class Matrix:
    """Immutable row-major matrix over a :class:`RingSpec`.

    Entries are stored as canonical ints (``[0, n)`` over ``Z/n``).  Empty
    shapes such as ``0 x 3`` are legal and represent the unique empty map.
    """

    __slots__ = ("rows", "cols", "entries", "ring", "_hash")

    def __init__(self, data: Iterable[Iterable[int]] = (), ring: RingSpec = ZZ,
                 shape: Optional[tuple] = None):
        entries = tuple(tuple(ring.reduce(int(x)) for x in row) for row in data)
        if shape is None:
            rows = len(entries)
            cols = len(entries[0]) if entries else 0
        else:
            rows, cols = shape
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ContractViolation(f"matrix data does not have shape {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows, cols, ring=ZZ):
        return cls([[0] * cols for _ in range(rows)], ring, (rows, cols))

    @classmethod
    def identity(cls, n, ring=ZZ):
        return cls(_lattice.identity(n), ring, (n, n))

    @classmethod
    def column(cls, values, ring=ZZ):
        values = list(values)
        return cls([[v] for v in values], ring, (len(values), 1))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def tolist(self):
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def col(self, j) -> list:
        return [r[j] for r in self.entries]

    def row(self, i) -> list:
        return list(self.entries[i])

    @property
    def T(self) -> "Matrix":
        return Matrix(_lattice.transpose(self.entries, self.rows, self.cols), self.ring,
                      (self.cols, self.rows))

    def _check(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ContractViolation(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(_lattice.matmul(self.entries, other.entries, self.cols, other.cols), self.ring,
                      (self.rows, other.cols))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ContractViolation(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                      self.ring, self.shape)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries], self.ring, self.shape)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return Matrix([[k * a for a in r] for r in self.entries], self.ring, self.shape)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def hstack(self, *others) -> "Matrix":
        mats = (self,) + others
        if len({m.rows for m in mats}) > 1:
            raise ContractViolation("hstack needs equal row counts")
        data = [sum((list(m.entries[i]) for m in mats), []) for i in range(self.rows)]
        return Matrix(data, self.ring, (self.rows, sum(m.cols for m in mats)))

    def vstack(self, *others) -> "Matrix":
        mats = (self,) + others
        if len({m.cols for m in mats}) > 1:
            raise ContractViolation("vstack needs equal column counts")
        return Matrix([r for m in mats for r in m.entries], self.ring,
                      (sum(m.rows for m in mats), self.cols))

    @staticmethod
    def block_diag(a: "Matrix", b: "Matrix") -> "Matrix":
        top = a.hstack(Matrix.zeros(a.rows, b.cols, a.ring))
        bottom = Matrix.zeros(b.rows, a.cols, a.ring).hstack(b)
        return top.vstack(bottom)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, self.shape, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Matrix({self.tolist()!r}, ring={self.ring}, shape={self.shape})"


def smith_normal_form(M: Matrix):
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` and ``D`` in Smith form."""
    if not M.ring.is_integers:
        raise ContractViolation("smith_normal_form expects a matrix over the integers")
    D, U, V, _ = _lattice.snf(M.entries, M.rows, M.cols)
    return (Matrix(D, M.ring, M.shape), Matrix(U, M.ring, (M.rows, M.rows)),
            Matrix(V, M.ring, (M.cols, M.cols)))


def solve_linear(A: Matrix, b: Matrix):
    """Solve ``A x = b``.

    Returns ``None`` when unsolvable, otherwise ``(x0, H)`` where ``x0`` is a
    column solution and the columns in ``H`` generate the homogeneous
    solutions.  Over ``Z/n`` the system ``[A | n I]`` is solved over ``Z``.
    """
    if A.ring != b.ring:
        raise RingMismatch(f"{A.ring} vs {b.ring}")
    if b.cols != 1 or b.rows != A.rows:
        raise ContractViolation(f"right-hand side of shape {b.shape} does not fit {A.shape}")
    ring = A.ring
    m, n = A.shape
    rhs = b.col(0)
    if ring.is_integers:
        res = _lattice.solve(A.entries, rhs, m, n)
        if res is None:
            return None
        x0, H = res
        return Matrix.column(x0), [Matrix.column(h) for h in H]
    mod = ring.modulus
    lifted = [list(A.entries[i]) + [mod * (i == k) for k in range(m)] for i in range(m)]
    res = _lattice.solve(lifted, rhs, m, n + m)
    if res is None:
        return None
    x0, H = res
    proj = [h[:n] for h in H] + [[mod * (i == j) for j in range(n)] for i in range(n)]
    lat = _lattice.Lattice(proj, n)
    x0 = [x % mod for x in lat.reduce(x0[:n])]
    gens = []
    for h in lat.basis:
        h = [x % mod for x in h]
        if any(h) and h not in gens:
            gens.append(h)
    return Matrix.column(x0, ring), [Matrix.column(h, ring) for h in gens]


def column_span_contains(A: Matrix, b: Matrix) -> bool:
    return solve_linear(A, b) is not None
