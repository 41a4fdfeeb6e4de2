"""Integer-only kernels: Smith form, Hermite form, lattice membership.

Everything here works on plain ``list[list[int]]`` so that higher layers can
stay free of wrapper overhead in the inner loops.  Rows are Python lists of
arbitrary precision ints.
"""
from __future__ import annotations


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B, inner, p=None):
    """Product of an (m x inner) and an (inner x p) list matrix."""
    if not A:
        return []
    if p is None:
        p = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * p
        for k in range(inner):
            a = row[k]
            if a:
                bk = B[k]
                for j in range(p):
                    b = bk[j]
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def transpose(A, nrows, ncols):
    return [[A[i][j] for i in range(nrows)] for j in range(ncols)]


def snf(A, m, n):
    """Smith normal form of an m x n integer matrix.

    Returns ``(D, U, V, Vinv)`` with ``U @ A @ V == D``.  Pivot choice is the
    smallest absolute nonzero entry of the active block, ties broken by the
    lowest (row, col) pair, so the transforms are reproducible.
    """
    A = [list(row) for row in A]
    U = identity(m)
    V = identity(n)
    Vi = identity(n)
    t = 0
    lim = min(m, n)
    while t < lim:
        best = 0
        pi = pj = -1
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                a = row[j]
                if a:
                    a = -a if a < 0 else a
                    if best == 0 or a < best:
                        best, pi, pj = a, i, j
                        if a == 1:
                            break
            if best == 1:
                break
        if best == 0:
            break
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
            U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            for row in V:
                row[t], row[pj] = row[pj], row[t]
            Vi[t], Vi[pj] = Vi[pj], Vi[t]
        p = A[t][t]
        clean = True
        rt = A[t]
        ut = U[t]
        for i in range(t + 1, m):
            a = A[i][t]
            if a:
                q = a // p
                ri = A[i]
                for j in range(t, n):
                    if rt[j]:
                        ri[j] -= q * rt[j]
                ui = U[i]
                for j in range(m):
                    if ut[j]:
                        ui[j] -= q * ut[j]
                if ri[t]:
                    clean = False
        for j in range(t + 1, n):
            a = rt[j]
            if a:
                q = a // p
                for row in A:
                    if row[t]:
                        row[j] -= q * row[t]
                for row in V:
                    if row[t]:
                        row[j] -= q * row[t]
                vj = Vi[j]
                vt = Vi[t]
                for k in range(n):
                    if vj[k]:
                        vt[k] += q * vj[k]
                if rt[j]:
                    clean = False
        if not clean:
            continue
        bad = -1
        for i in range(t + 1, m):
            ri = A[i]
            for j in range(t + 1, n):
                if ri[j] % p:
                    bad = i
                    break
            if bad >= 0:
                break
        if bad >= 0:
            rb = A[bad]
            for j in range(n):
                rt[j] += rb[j]
            ub = U[bad]
            for j in range(m):
                ut[j] += ub[j]
            continue
        if p < 0:
            A[t] = [-x for x in rt]
            U[t] = [-x for x in ut]
        t += 1
    return A, U, V, Vi


def diagonal(D, m, n):
    return [D[i][i] for i in range(min(m, n))]


def solve(A, b, m, n):
    """Solve ``A x = b`` over the integers.

    Returns ``None`` if there is no integral solution, else ``(x0, H)`` with
    ``H`` a canonical (Hermite) basis of the integer kernel, as a list of
    vectors, and ``x0`` reduced modulo that kernel.
    """
    if len(b) != m:
        raise ValueError("right-hand side has wrong length")
    D, U, V, _ = snf(A, m, n)
    c = matvec(U, b) if m else []
    diag = diagonal(D, m, n)
    r = sum(1 for d in diag if d)
    y = [0] * n
    for i in range(r):
        if c[i] % diag[i]:
            return None
        y[i] = c[i] // diag[i]
    for i in range(r, m):
        if c[i]:
            return None
    x0 = matvec(V, y) if n else []
    kernel = [[V[k][j] for k in range(n)] for j in range(r, n)]
    lat = Lattice(kernel, n)
    return lat.reduce(x0), [list(v) for v in lat.basis]


def kernel(A, m, n):
    """Hermite basis (list of vectors) of ``{x in Z^n : A x = 0}``."""
    D, _, V, _ = snf(A, m, n)
    r = sum(1 for d in diagonal(D, m, n) if d)
    return Lattice([[V[k][j] for k in range(n)] for j in range(r, n)], n).basis


def hnf(vectors, dim):
    """Row Hermite normal form of the lattice spanned by ``vectors``.

    Returns ``(basis, pivots)``: basis rows are in echelon form with positive
    pivots and entries above each pivot reduced into ``[0, pivot)``.  The
    result depends only on the lattice.
    """
    A = [list(v) for v in vectors if any(v)]
    r = 0
    pivots = []
    for col in range(dim):
        if r >= len(A):
            break
        while True:
            k = -1
            best = 0
            for i in range(r, len(A)):
                a = A[i][col]
                if a:
                    a = -a if a < 0 else a
                    if best == 0 or a < best:
                        best, k = a, i
            if k < 0:
                break
            A[r], A[k] = A[k], A[r]
            pr = A[r]
            p = pr[col]
            done = True
            for i in range(r + 1, len(A)):
                a = A[i][col]
                if a:
                    q = a // p
                    ri = A[i]
                    for j in range(col, dim):
                        if pr[j]:
                            ri[j] -= q * pr[j]
                    if ri[col]:
                        done = False
            if done:
                break
        if r < len(A) and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-x for x in A[r]]
            pr = A[r]
            p = pr[col]
            for i in range(r):
                q = A[i][col] // p
                if q:
                    ri = A[i]
                    for j in range(col, dim):
                        if pr[j]:
                            ri[j] -= q * pr[j]
            pivots.append(col)
            r += 1
            # rows that became zero are dropped lazily
            A = A[:r] + [row for row in A[r:] if any(row)]
    return [tuple(row) for row in A[:r]], pivots


class Lattice:
    """A sublattice of ``Z^dim`` kept in Hermite normal form."""

    __slots__ = ("dim", "basis", "pivots")

    def __init__(self, generators, dim):
        self.dim = dim
        self.basis, self.pivots = hnf(generators, dim)

    @property
    def rank(self):
        return len(self.basis)

    def reduce(self, v):
        """Canonical representative of ``v`` modulo the lattice."""
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            q = v[c] // row[c]
            if q:
                for j in range(c, self.dim):
                    if row[j]:
                        v[j] -= q * row[j]
        return v

    def coords(self, v):
        """Integer coefficients of ``v`` in the basis, or None if ``v`` is outside."""
        v = list(v)
        out = []
        for row, c in zip(self.basis, self.pivots):
            a = v[c]
            if a % row[c]:
                return None
            a //= row[c]
            out.append(a)
            if a:
                for j in range(c, self.dim):
                    if row[j]:
                        v[j] -= a * row[j]
        if any(v):
            return None
        return out

    def __contains__(self, v):
        return not any(self.reduce(v))


class Subquotient:
    """Presentation data for ``W / Z0`` where ``Z0 <= W <= Z^dim``.

    ``factors`` are the invariant factors that survive (never 1; 0 marks a
    free summand), ``gens`` are ambient vectors of the new generators, and
    :meth:`coords` maps an ambient vector of ``W`` to coordinates in those
    generators.
    """

    def __init__(self, w_gens, z_gens, dim):
        self.dim = dim
        self.w = Lattice(w_gens, dim)
        m = self.w.rank
        rel = []
        for z in z_gens:
            c = self.w.coords(z)
            if c is None:
                raise ValueError("relation vector outside the generating lattice")
            if any(c):
                rel.append(c)
        self.rel_count = len(rel)
        D, _, V, Vi = snf(rel, len(rel), m)
        diag = diagonal(D, len(rel), m) + [0] * max(0, m - len(rel))
        keep = [j for j in range(m) if diag[j] != 1]
        self.factors = [diag[j] for j in keep]
        self._V = [[V[i][j] for j in keep] for i in range(m)]
        basis = self.w.basis
        self.gens = []
        for j in keep:
            g = [0] * dim
            for i, a in enumerate(Vi[j]):
                if a:
                    row = basis[i]
                    for k in range(dim):
                        if row[k]:
                            g[k] += a * row[k]
            self.gens.append(g)

    def coords(self, v):
        c = self.w.coords(v)
        if c is None:
            raise ValueError("vector does not lie in the generating lattice")
        out = []
        for j, d in enumerate(self.factors):
            x = sum(c[i] * self._V[i][j] for i in range(len(c)) if c[i])
            out.append(x % d if d else x)
        return out
