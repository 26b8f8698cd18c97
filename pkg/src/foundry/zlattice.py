"""Exact integer linear algebra for finitely generated abelian groups.

Everything works over plain Python ints: Smith normal form with unimodular
transforms, cokernel presentations, modular linear solves, and enumeration
of homomorphisms between finite abelian groups.
"""

from __future__ import annotations

import itertools
from math import gcd, prod


class IntMatrix:
    """An immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if data:
            cols = len(data[0]) if cols is None else cols
            for row in data:
                if len(row) != cols:
                    raise ValueError("ragged rows in matrix data")
        elif cols is None:
            cols = 0
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(tuple((0,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def fromColumns(cls, columns, dim=None):
        """Build a matrix whose j-th column is columns[j] (each of length dim)."""
        columns = [tuple(c) for c in columns]
        if dim is None:
            if not columns:
                raise ValueError("need dim for a matrix with no columns")
            dim = len(columns[0])
        for c in columns:
            if len(c) != dim:
                raise ValueError("column length mismatch")
        return cls(tuple(tuple(c[i] for c in columns) for i in range(dim)), cols=len(columns))

    def entry(self, i, j):
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix(tuple(self.column(j) for j in range(self.cols)), cols=self.rows)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.transpose().data
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.data),
            cols=other.cols,
        )

    def mulVector(self, vec):
        """Matrix times column vector, returned as a tuple."""
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return IntMatrix(
            tuple(r1 + r2 for r1, r2 in zip(self.data, other.data)),
            cols=self.cols + other.cols,
        )

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return IntMatrix(self.data + other.data, cols=self.cols)

    def toLists(self):
        return [list(row) for row in self.data]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data and self.cols == other.cols

    def __hash__(self):
        return hash((self.cols, self.data))

    def __repr__(self):
        return "IntMatrix(%r)" % (self.toLists(),)


class SnfResult:
    """Smith normal form data: U @ A @ V == D with U, V unimodular."""

    __slots__ = ("U", "D", "V")

    def __init__(self, U, D, V):
        self.U = U
        self.D = D
        self.V = V

    def diagonal(self):
        k = min(self.D.rows, self.D.cols)
        return tuple(self.D.entry(i, i) for i in range(k))


def _swapRows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swapCols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _addRow(m, dst, src, factor):
    m[dst] = [a + factor * b for a, b in zip(m[dst], m[src])]


def _addCol(m, dst, src, factor):
    for row in m:
        row[dst] += factor * row[src]


def smithNormalForm(a):
    """Smith normal form of an integer matrix.

    Pivot selection is deterministic: the entry of smallest absolute value in
    the working block, ties broken by lowest (row, col).  The diagonal of D is
    nonnegative and each entry divides the next.
    """
    m, n = a.rows, a.cols
    d = [list(row) for row in a.data]
    u = IntMatrix.identity(m).toLists()
    v = IntMatrix.identity(n).toLists()
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = d[i][j]
                if e and (best is None or (abs(e), i, j) < best):
                    best = (abs(e), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            _swapRows(d, t, bi)
            _swapRows(u, t, bi)
        if bj != t:
            _swapCols(d, t, bj)
            _swapCols(v, t, bj)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        pivot = d[t][t]
        for i in range(t + 1, m):
            q = d[i][t] // pivot
            if q:
                _addRow(d, i, t, -q)
                _addRow(u, i, t, -q)
        for j in range(t + 1, n):
            q = d[t][j] // pivot
            if q:
                _addCol(d, j, t, -q)
                _addCol(v, j, t, -q)
        if any(d[i][t] for i in range(t + 1, m)) or any(d[t][j] for j in range(t + 1, n)):
            continue  # leftover remainders are smaller than the pivot; reselect
        offender = None
        for i in range(t + 1, m):
            if any(d[i][j] % pivot for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            _addRow(d, t, offender, 1)
            _addRow(u, t, offender, 1)
            continue
        t += 1
    return SnfResult(IntMatrix(u, cols=m), IntMatrix(d, cols=n), IntMatrix(v, cols=n))


def determinant(a):
    """Determinant of a square integer matrix (fraction-free elimination)."""
    if a.rows != a.cols:
        raise ValueError("determinant needs a square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(row) for row in a.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            _swapRows(m, k, swap)
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class GroupPresentation:
    """A finitely generated abelian group Z/a_1 + ... + Z/a_p + Z^freeRank.

    The invariants a_i are all >= 2 and form a divisibility chain.  Elements
    are coordinate tuples of length dim; torsion coordinates come first.
    """

    __slots__ = ("invariants", "freeRank")

    def __init__(self, invariants, freeRank):
        invariants = tuple(int(a) for a in invariants)
        for a in invariants:
            if a < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(invariants, invariants[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        if freeRank < 0:
            raise ValueError("free rank must be nonnegative")
        self.invariants = invariants
        self.freeRank = int(freeRank)

    @property
    def dim(self):
        return len(self.invariants) + self.freeRank

    def zero(self):
        return (0,) * self.dim

    def reduce(self, vec):
        """Canonical coordinates: torsion entries mod a_i, free entries as-is."""
        vec = tuple(vec)
        if len(vec) != self.dim:
            raise ValueError("element has wrong length")
        head = tuple(x % a for x, a in zip(vec, self.invariants))
        return head + vec[len(self.invariants):]

    def add(self, *vecs):
        total = [0] * self.dim
        for v in vecs:
            for i, x in enumerate(v):
                total[i] += x
        return self.reduce(total)

    def neg(self, vec):
        return self.reduce(tuple(-x for x in vec))

    def scale(self, k, vec):
        return self.reduce(tuple(k * x for x in vec))

    def isZero(self, vec):
        return self.reduce(vec) == self.zero()

    def torsionPart(self, vec):
        """The same element with free coordinates dropped to zero."""
        head = vec[:len(self.invariants)]
        return self.reduce(head + (0,) * self.freeRank)

    def freePart(self, vec):
        """Just the free coordinates, as a tuple of length freeRank."""
        vec = tuple(vec)
        return vec[len(self.invariants):]

    def order(self):
        return prod(self.invariants) if self.freeRank == 0 else None

    def allElements(self):
        """All elements in lexicographic coordinate order (finite groups only)."""
        if self.freeRank:
            raise ValueError("group is infinite")
        return [tuple(c) for c in itertools.product(*(range(a) for a in self.invariants))]

    def relationColumns(self):
        """Columns a_i * e_i spanning the relation lattice inside Z^dim."""
        cols = []
        for i, a in enumerate(self.invariants):
            col = [0] * self.dim
            col[i] = a
            cols.append(tuple(col))
        return cols

    def __eq__(self, other):
        return (
            isinstance(other, GroupPresentation)
            and self.invariants == other.invariants
            and self.freeRank == other.freeRank
        )

    def __hash__(self):
        return hash((self.invariants, self.freeRank))

    def __repr__(self):
        return "GroupPresentation(%r, %r)" % (list(self.invariants), self.freeRank)


class GroupHom:
    """A homomorphism between presented groups, given by an integer matrix.

    The matrix has shape target.dim x source.dim and acts on coordinate
    columns.  Well-definedness requires a_j * column(j) to vanish in the
    target for every torsion coordinate j of the source.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise ValueError("hom matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, vec):
        return self.target.reduce(self.matrix.mulVector(vec))

    def isWellDefined(self):
        for j, a in enumerate(self.source.invariants):
            col = self.matrix.column(j)
            if not self.target.isZero(tuple(a * x for x in col)):
                return False
        return True

    def canonicalMatrix(self):
        """The matrix with every column reduced to canonical target coordinates."""
        cols = [self.apply((0,) * j + (1,) + (0,) * (self.source.dim - j - 1))
                for j in range(self.source.dim)]
        return IntMatrix.fromColumns(cols, dim=self.target.dim)

    def compose(self, inner):
        """self after inner (source of self must be target of inner)."""
        if inner.target != self.source:
            raise ValueError("homs are not composable")
        return GroupHom(inner.source, self.target, self.matrix @ inner.matrix)

    def isSurjective(self):
        """True when the image together with target relations spans Z^dim."""
        cols = self.matrix.columns() + self.target.relationColumns()
        if not cols:
            return self.target.dim == 0
        stacked = IntMatrix.fromColumns(cols, dim=self.target.dim)
        pres, _ = cokernelPresentation(stacked)
        return pres.dim == 0

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and self.source == other.source
            and self.target == other.target
            and self.canonicalMatrix() == other.canonicalMatrix()
        )

    def __hash__(self):
        return hash((self.source, self.target, self.canonicalMatrix()))

    def __repr__(self):
        return "GroupHom(%r)" % (self.matrix.toLists(),)


def identityHom(pres):
    return GroupHom(pres, pres, IntMatrix.identity(pres.dim))


def cokernelPresentation(relations):
    """Present Z^g modulo the column span of an integer matrix.

    Returns (presentation, projection) where projection is the quotient hom
    from the free ambient group Z^g (presented with no torsion) onto the
    cokernel in canonical coordinates.
    """
    g = relations.rows
    snf = smithNormalForm(relations)
    diag = snf.diagonal()
    torsionRows = [i for i, d in enumerate(diag) if d >= 2]
    freeRows = [i for i in range(g) if i >= len(diag) or diag[i] == 0]
    pres = GroupPresentation([diag[i] for i in torsionRows], len(freeRows))
    rows = []
    for i in torsionRows:
        a = diag[i]
        rows.append(tuple(x % a for x in snf.U.row(i)))
    for i in freeRows:
        rows.append(snf.U.row(i))
    ambient = GroupPresentation([], g)
    projection = GroupHom(ambient, pres, IntMatrix(rows or [], cols=g))
    return pres, projection


def solveModular(a, b, n):
    """One solution x (length a.rows) of x @ A == B modulo n, or None.

    n == 0 means solve over the integers.  B is a sequence of length a.cols.
    """
    if n < 0:
        raise ValueError("modulus must be nonnegative")
    b = tuple(int(x) for x in b)
    if len(b) != a.cols:
        raise ValueError("right-hand side has wrong length")
    work = a
    if n:
        scaled = IntMatrix(tuple(tuple(n if i == j else 0 for j in range(a.cols)) for i in range(a.cols)), cols=a.cols)
        work = a.vstack(scaled)
    # x @ work == b  <=>  work^T @ x^T == b^T
    at = work.transpose()
    snf = smithNormalForm(at)
    c = snf.U.mulVector(b)
    diag = snf.diagonal()
    z = [0] * at.cols
    for i, ci in enumerate(c):
        d = diag[i] if i < len(diag) else 0
        if d:
            if ci % d:
                return None
            z[i] = ci // d
        elif ci:
            return None
    x = snf.V.mulVector(z)[:a.rows]
    if n:
        x = tuple(e % n for e in x)
    return tuple(x)


def homFinite(source, target):
    """All homomorphisms between finite groups, in a fixed deterministic order.

    The count is the product over (i, j) of gcd(a_j, b_i).  Enumeration order:
    columns left to right, rows top to bottom, smallest multiplier first.
    """
    if source.freeRank or target.freeRank:
        raise ValueError("homFinite needs finite groups on both sides")
    slots = []
    for j, a in enumerate(source.invariants):
        for i, b in enumerate(target.invariants):
            g = gcd(a, b)
            step = b // g
            slots.append([(i, j, step * t) for t in range(g)])
    homs = []
    p, q = source.dim, target.dim
    for choice in itertools.product(*slots):
        mat = [[0] * p for _ in range(q)]
        for i, j, val in choice:
            mat[i][j] = val
        homs.append(GroupHom(source, target, IntMatrix(mat, cols=p)))
    return homs
