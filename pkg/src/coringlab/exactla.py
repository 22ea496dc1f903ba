"""Exact dense linear algebra over F_p and Q.

Every construction in this package (tensor products over a ring, Hom
spaces, equalizers, canonical maps) compiles down to the matrices in
this module.  Scalars are exact: integers mod p, or `fractions.Fraction`.
Floating point never appears.

All basis choices are deterministic so that two runs on the same input
are bit-identical:

  * subspaces are stored with their basis in reduced row echelon form;
  * quotients use the non-pivot coordinates of the relation RREF;
  * `solve` zeroes out free variables.

Conventions:

  * elements of a space are column vectors (`Mat` with one column);
  * a linear map V -> W is a (dim W) x (dim V) matrix acting by `m @ v`;
  * `Subspace.basis` stores basis vectors as rows;
  * `kron(a, b)` indexes tensor slots row-major: slot (i, j) sits at
    index i * dim_b + j, so iterated Kronecker products need no
    re-indexing.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """Ground field: F_p for a prime p, or the rationals."""

    __slots__ = ("kind", "p", "zero", "one")

    def __init__(self, kind, p=None):
        if kind == "prime":
            if p is None or not _is_prime(p):
                raise ValueError(f"modulus must be a prime >= 2, got {p!r}")
            self.zero = 0
            self.one = 1 % p
        elif kind == "rationals":
            p = None
            self.zero = Fraction(0)
            self.one = Fraction(1)
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def normalize(self, a):
        if self.p:
            return int(a) % self.p
        return Fraction(a)

    def parse(self, text):
        """Scalar from an int or a string like '2' or '-3/7'."""
        if isinstance(text, int):
            return self.normalize(text)
        if isinstance(text, str):
            if self.p:
                return int(text) % self.p
            return Fraction(text)
        raise ValueError(f"cannot parse scalar {text!r}")

    def show(self, a):
        return str(a)

    def elements(self):
        """All field elements; only for finite fields."""
        if not self.p:
            raise ValueError("cannot enumerate the rationals")
        return range(self.p)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"


def GF(p):
    return FieldSpec("prime", p)


def QQ():
    return FieldSpec("rationals")


class Mat:
    """Immutable dense matrix over a FieldSpec, entries row-major."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        assert rows >= 0 and cols >= 0
        data = tuple(field.normalize(x) for x in data)
        assert len(data) == rows * cols, (rows, cols, len(data))
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rows(field, rows_list):
        r = len(rows_list)
        c = len(rows_list[0]) if r else 0
        flat = []
        for row in rows_list:
            assert len(row) == c, "ragged rows"
            flat.extend(row)
        return Mat(field, r, c, flat)

    @staticmethod
    def from_cols(field, cols_list):
        return Mat.from_rows(field, cols_list).T() if cols_list else Mat(field, 0, 0, [])

    @staticmethod
    def from_fn(field, rows, cols, fn):
        return Mat(field, rows, cols, [fn(i, j) for i in range(rows) for j in range(cols)])

    @staticmethod
    def identity(field, n):
        return Mat.from_fn(field, n, n, lambda i, j: field.one if i == j else field.zero)

    @staticmethod
    def zeros(field, rows, cols):
        return Mat(field, rows, cols, [field.zero] * (rows * cols))

    @staticmethod
    def column(field, entries):
        return Mat(field, len(entries), 1, entries)

    @staticmethod
    def unit_column(field, n, i):
        data = [field.zero] * n
        data[i] = field.one
        return Mat(field, n, 1, data)

    # -- access ---------------------------------------------------------

    def entry(self, i, j):
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j):
        return Mat(self.field, self.rows, 1, [self.data[i * self.cols + j] for i in range(self.rows)])

    def col_tuple(self, j):
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        f = self.field
        return Mat(f, self.rows, self.cols, [f.add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        f = self.field
        return Mat(f, self.rows, self.cols, [f.sub(a, b) for a, b in zip(self.data, other.data)])

    def __neg__(self):
        f = self.field
        return Mat(f, self.rows, self.cols, [f.neg(a) for a in self.data])

    def scale(self, c):
        f = self.field
        c = f.normalize(c)
        return Mat(f, self.rows, self.cols, [f.mul(c, a) for a in self.data])

    def __matmul__(self, other):
        assert self.cols == other.rows, (self.rows, self.cols, other.rows, other.cols)
        f = self.field
        n, m, k = self.rows, other.cols, self.cols
        zero = f.zero
        out = [zero] * (n * m)
        sd, od = self.data, other.data
        for i in range(n):
            base = i * k
            for t in range(k):
                a = sd[base + t]
                if a == zero:
                    continue
                ob = t * m
                rb = i * m
                if f.p:
                    p = f.p
                    for j in range(m):
                        b = od[ob + j]
                        if b:
                            out[rb + j] = (out[rb + j] + a * b) % p
                else:
                    for j in range(m):
                        b = od[ob + j]
                        if b:
                            out[rb + j] = out[rb + j] + a * b
        return Mat(f, n, m, out)

    def T(self):
        f = self.field
        return Mat(f, self.cols, self.rows,
                   [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def hstack(self, other):
        assert self.rows == other.rows
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return Mat.from_rows(self.field, rows) if self.rows else Mat(self.field, 0, self.cols + other.cols, [])

    def vstack(self, other):
        assert self.cols == other.cols
        return Mat(self.field, self.rows + other.rows, self.cols, self.data + other.data)

    def submatrix(self, r0, r1, c0, c1):
        return Mat.from_fn(self.field, r1 - r0, c1 - c0, lambda i, j: self.entry(r0 + i, c0 + j))

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        z = self.field.zero
        return all(x == z for x in self.data)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        f = self.field
        return all(
            self.entry(i, j) == (f.one if i == j else f.zero)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def rank(self):
        return len(rref(self)[1])

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.show(x) for x in self.row(i)) for i in range(self.rows))
        return f"Mat({self.rows}x{self.cols}: {body})"


def rref(m):
    """Reduced row echelon form.

    Returns (R, pivots) where R is the unique RREF of m and pivots is the
    strictly increasing tuple of pivot column indices.
    """
    f = m.field
    zero, one = f.zero, f.one
    rows = [list(m.data[i * m.cols : (i + 1) * m.cols]) for i in range(m.rows)]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(m.cols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        head = rows[r][c]
        if head != one:
            inv = f.inv(head)
            rows[r] = [f.mul(inv, x) for x in rows[r]]
        rr = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            t = rows[i][c]
            if t != zero:
                ri = rows[i]
                rows[i] = [f.sub(ri[j], f.mul(t, rr[j])) for j in range(m.cols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    flat = [x for row in rows for x in row]
    return Mat(f, m.rows, m.cols, flat), tuple(pivots)


class Subspace:
    """Subspace of k^n with canonical (RREF) row basis.

    Equal subspaces have entrywise equal bases, so `==` on the basis
    matrices decides subspace equality.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis, pivots):
        assert basis.cols == ambient_dim
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @property
    def dim(self):
        return self.basis.rows

    def coords(self, v):
        """Coordinates of column vector v in the RREF basis, or None.

        Because the basis is in RREF, candidate coordinates are just the
        entries of v at the pivot columns.
        """
        assert v.rows == self.ambient_dim and v.cols == 1
        cand = Mat.column(self.field, [v.data[p] for p in self.pivots])
        if self.basis.T() @ cand == v:
            return cand
        return None

    def contains(self, v):
        return self.coords(v) is not None

    def lift(self, coords):
        """Ambient column vector with the given basis coordinates."""
        return self.basis.T() @ coords

    @property
    def field(self):
        return self.basis.field

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"


def span_rows(field, ambient_dim, vectors):
    """Canonical subspace spanned by an iterable of row tuples."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return Subspace(ambient_dim, Mat(field, 0, ambient_dim, []), ())
    m = Mat.from_rows(field, vectors)
    R, piv = rref(m)
    basis = Mat(field, len(piv), ambient_dim, R.data[: len(piv) * ambient_dim])
    return Subspace(ambient_dim, basis, piv)


def zero_subspace(field, ambient_dim):
    return span_rows(field, ambient_dim, [])


def full_subspace(field, ambient_dim):
    return Subspace(ambient_dim, Mat.identity(field, ambient_dim), tuple(range(ambient_dim)))


def column_space(m):
    """Span of the columns of m, as a canonical subspace of k^rows."""
    return span_rows(m.field, m.rows, [m.col_tuple(j) for j in range(m.cols)])


def kernel(m):
    """Canonical basis of {v : m @ v = 0}."""
    R, piv = rref(m)
    f = m.field
    pivset = set(piv)
    free = [c for c in range(m.cols) if c not in pivset]
    specials = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for i, p in enumerate(piv):
            v[p] = f.neg(R.entry(i, fc))
        specials.append(v)
    return span_rows(f, m.cols, specials)


def solve(a, b):
    """X with a @ X = b and free variables zero, or None if inconsistent."""
    assert a.rows == b.rows
    R, piv = rref(a.hstack(b))
    if any(p >= a.cols for p in piv):
        return None
    f = a.field
    out = [[f.zero] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(piv):
        for j in range(b.cols):
            out[p][j] = R.entry(i, a.cols + j)
    if not out:
        return Mat(f, a.cols, b.cols, [])
    return Mat.from_rows(f, out)


def inverse(m):
    """Two-sided inverse of a square matrix, or None."""
    if m.rows != m.cols:
        return None
    x = solve(m, Mat.identity(m.field, m.rows))
    if x is None or not (m @ x).is_identity() or not (x @ m).is_identity():
        return None
    return x


def kron(a, b):
    """Kronecker product with row-major slot indexing.

    kron(f, g) realizes f tensor g on the underlying field tensor
    product: column index i_a * cols_b + i_b maps under it consistently
    with the (i, j) |-> i * dim + j slot convention.
    """
    assert a.field == b.field
    f = a.field
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [f.zero] * (rows * cols)
    for ia in range(a.rows):
        for ja in range(a.cols):
            x = a.entry(ia, ja)
            if x == f.zero:
                continue
            for ib in range(b.rows):
                rbase = (ia * b.rows + ib) * cols
                bbase = ib * b.cols
                for jb in range(b.cols):
                    y = b.data[bbase + jb]
                    if y != f.zero:
                        out[rbase + ja * b.cols + jb] = f.mul(x, y)
    return Mat(f, rows, cols, out)


class QuotientData:
    """Cokernel presentation k^n / relations with a fixed splitting.

    projection: n -> dim kills exactly the relations; section: dim -> n
    picks the representative supported on the non-pivot coordinates of
    the relation RREF, so projection @ section = identity.
    """

    __slots__ = ("ambient_dim", "relations", "dim", "projection", "section")

    def __init__(self, ambient_dim, relations, dim, projection, section):
        self.ambient_dim = ambient_dim
        self.relations = relations
        self.dim = dim
        self.projection = projection
        self.section = section

    def __repr__(self):
        return f"QuotientData(k^{self.ambient_dim} -> k^{self.dim})"


def quotient(ambient_dim, relations):
    """Quotient of k^ambient_dim by a relation subspace."""
    assert relations.ambient_dim == ambient_dim
    f = relations.field
    piv = relations.pivots
    pivset = set(piv)
    free = [c for c in range(ambient_dim) if c not in pivset]
    dim = len(free)
    B = relations.basis
    proj = [[f.zero] * ambient_dim for _ in range(dim)]
    for j, fc in enumerate(free):
        proj[j][fc] = f.one
        for i, p in enumerate(piv):
            proj[j][p] = f.neg(B.entry(i, fc))
    sec = [[f.zero] * dim for _ in range(ambient_dim)]
    for j, fc in enumerate(free):
        sec[fc][j] = f.one
    projection = Mat.from_rows(f, proj) if dim else Mat(f, 0, ambient_dim, [])
    section = Mat.from_rows(f, sec) if ambient_dim else Mat(f, 0, dim, [])
    if ambient_dim and not dim:
        section = Mat(f, ambient_dim, 0, [])
    return QuotientData(ambient_dim, relations, dim, projection, section)
