"""Finite-dimensional associative algebras, possibly without unit.

An algebra is a structure-constant table c[i][j][k] over an exact field:
basis_i * basis_j = sum_k c[i][j][k] basis_k.  Units are optional; firm
rings (multiplication A (x)_A A -> A bijective) are first-class.

The radical/simple-module machinery here exists to operationalize
faithful flatness: over F_p it enumerates, over Q it uses the trace
form plus minimal-polynomial splitting of the center.  Both paths
re-verify their own output (nilpotency, semisimple quotient, dimension
count), so a wrong answer cannot emerge silently.
"""

from __future__ import annotations

import itertools

from .errors import UnsupportedField, ValidationError
from .exactla import Mat, inverse, kernel, quotient, solve, span_rows

# enumeration ceiling for brute-force searches over finite fields
_ENUM_BOUND = 8192


class Algebra:
    """Associative algebra from structure constants; unit optional."""

    __slots__ = ("field", "dim", "mul", "unit", "labels")

    def __init__(self, field, dim, mul, unit=None, labels=None):
        self.field = field
        self.dim = dim
        self.mul = tuple(
            tuple(tuple(field.normalize(x) for x in row) for row in plane) for plane in mul
        )
        assert len(self.mul) == dim and all(
            len(p) == dim and all(len(r) == dim for r in p) for p in self.mul
        )
        self.unit = unit if unit is None else Mat.column(field, list(unit.data) if isinstance(unit, Mat) else list(unit))
        if self.unit is not None:
            assert self.unit.rows == dim and self.unit.cols == 1
        self.labels = tuple(labels) if labels else tuple(f"e{i}" for i in range(dim))

    @property
    def is_unital(self):
        return self.unit is not None

    def basis_vector(self, i):
        return Mat.unit_column(self.field, self.dim, i)

    def left_mult_basis(self, i):
        """Matrix of x |-> basis_i * x."""
        return Mat.from_fn(self.field, self.dim, self.dim, lambda k, j: self.mul[i][j][k])

    def right_mult_basis(self, j):
        """Matrix of x |-> x * basis_j."""
        return Mat.from_fn(self.field, self.dim, self.dim, lambda k, i: self.mul[i][j][k])

    def left_mult(self, v):
        m = Mat.zeros(self.field, self.dim, self.dim)
        for i in range(self.dim):
            c = v.data[i]
            if c != self.field.zero:
                m = m + self.left_mult_basis(i).scale(c)
        return m

    def right_mult(self, v):
        m = Mat.zeros(self.field, self.dim, self.dim)
        for j in range(self.dim):
            c = v.data[j]
            if c != self.field.zero:
                m = m + self.right_mult_basis(j).scale(c)
        return m

    def mul_vec(self, x, y):
        return self.left_mult(x) @ y

    def elements(self):
        """All elements as column vectors; finite fields only."""
        if not self.field.p:
            raise UnsupportedField("cannot enumerate elements over Q")
        for tup in itertools.product(self.field.elements(), repeat=self.dim):
            yield Mat.column(self.field, list(tup))

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.mul == other.mul
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.mul, self.unit))

    def __repr__(self):
        u = "unital" if self.is_unital else "non-unital"
        return f"Algebra(dim {self.dim} over {self.field!r}, {u})"


def check_algebra(a):
    """List of violated associativity/unit identities (empty iff valid)."""
    report = []
    lab = a.labels
    for i in range(a.dim):
        for j in range(a.dim):
            ij = Mat.column(a.field, list(a.mul[i][j]))
            for k in range(a.dim):
                jk = Mat.column(a.field, list(a.mul[j][k]))
                lhs = a.mul_vec(ij, a.basis_vector(k))
                rhs = a.mul_vec(a.basis_vector(i), jk)
                if lhs != rhs:
                    report.append(
                        f"associativity fails at basis triple ({lab[i]}, {lab[j]}, {lab[k]})"
                    )
    if a.is_unital:
        for i in range(a.dim):
            e = a.basis_vector(i)
            if a.mul_vec(a.unit, e) != e:
                report.append(f"unit fails on the left at basis element {lab[i]}")
            if a.mul_vec(e, a.unit) != e:
                report.append(f"unit fails on the right at basis element {lab[i]}")
    return report


def validate_algebra(a, name="algebra"):
    bad = check_algebra(a)
    if bad:
        raise ValidationError(name, bad[0])


# ---------------------------------------------------------------------------
# stock constructions used by the corpus and the tests


def ground_algebra(field):
    """The field itself as a 1-dimensional unital algebra."""
    return Algebra(field, 1, [[[field.one]]], unit=[field.one], labels=["1"])


def extension_field_algebra(field, min_poly):
    """k[x]/(m(x)) for a monic minimal polynomial given by its tail.

    `min_poly` lists the coefficients of m below the leading term, so
    x^d = -(min_poly[0] + min_poly[1] x + ...).  Basis 1, x, ..., x^{d-1}.
    """
    d = len(min_poly)
    f = field
    red = [f.neg(f.normalize(c)) for c in min_poly]

    def times_x(vec):
        out = [f.zero] * d
        for i in range(d - 1):
            out[i + 1] = vec[i]
        top = vec[d - 1]
        if top != f.zero:
            for i in range(d):
                out[i] = f.add(out[i], f.mul(top, red[i]))
        return out

    powers = []
    cur = [f.one] + [f.zero] * (d - 1)
    for _ in range(2 * d):
        powers.append(cur)
        cur = times_x(cur)

    mul = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            mul[i][j] = list(powers[i + j])
    unit = [f.one] + [f.zero] * (d - 1)
    labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, d)]
    return Algebra(field, d, mul, unit=unit, labels=labels)


def f4_algebra():
    """The field with four elements over F_2: basis 1, w with w^2 = 1 + w."""
    from .exactla import GF

    a = extension_field_algebra(GF(2), [1, 1])
    return Algebra(a.field, 2, a.mul, unit=a.unit, labels=["1", "w"])


def truncated_poly_algebra(field, d):
    """k[x]/(x^d)."""
    f = field
    mul = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            if i + j < d:
                mul[i][j][i + j] = f.one
    unit = [f.one] + [f.zero] * (d - 1)
    return Algebra(field, d, mul, unit=unit, labels=["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, d)])


def matrix_algebra(field, n):
    """Full matrix algebra M_n(k); basis e_{rc} at index r * n + c."""
    f = field
    d = n * n
    mul = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for r in range(n):
        for c in range(n):
            for r2 in range(n):
                for c2 in range(n):
                    if c == r2:
                        mul[r * n + c][r2 * n + c2][r * n + c2] = f.one
    unit = [f.zero] * d
    for r in range(n):
        unit[r * n + r] = f.one
    labels = [f"e{r}{c}" for r in range(n) for c in range(n)]
    return Algebra(field, d, mul, unit=unit, labels=labels)


def upper_triangular_algebra(field, n):
    """Upper triangular n x n matrices."""
    f = field
    idx = [(r, c) for r in range(n) for c in range(r, n)]
    pos = {rc: i for i, rc in enumerate(idx)}
    d = len(idx)
    mul = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for i, (r, c) in enumerate(idx):
        for j, (r2, c2) in enumerate(idx):
            if c == r2:
                mul[i][j][pos[(r, c2)]] = f.one
    unit = [f.zero] * d
    for r in range(n):
        unit[pos[(r, r)]] = f.one
    return Algebra(field, d, mul, unit=unit, labels=[f"e{r}{c}" for (r, c) in idx])


def product_algebra(a, b):
    """Direct product A x B."""
    assert a.field == b.field
    f = a.field
    d = a.dim + b.dim
    mul = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                mul[i][j][k] = a.mul[i][j][k]
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                mul[a.dim + i][a.dim + j][a.dim + k] = b.mul[i][j][k]
    unit = None
    if a.is_unital and b.is_unital:
        unit = list(a.unit.data) + list(b.unit.data)
    labels = [f"l.{x}" for x in a.labels] + [f"r.{x}" for x in b.labels]
    return Algebra(f, d, mul, unit=unit, labels=labels)


def null_algebra(field, dim):
    """All products zero; not unital, not firm for dim > 0."""
    z = field.zero
    mul = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    return Algebra(field, dim, mul)


def row_matrix_algebra(field):
    """2x2 matrices supported on the first row: span{e11, e12}.

    Non-unital (e11 is only a left unit) but firm; the standard small
    example of a firm ring without unit.
    """
    f = field
    mul = [[[f.zero] * 2 for _ in range(2)] for _ in range(2)]
    mul[0][0][0] = f.one  # e*e = e
    mul[0][1][1] = f.one  # e*f = f
    # f*e = f*f = 0
    return Algebra(field, 2, mul, labels=["e", "f"])


def column_matrix_algebra(field):
    """2x2 matrices supported on the first column: span{e11, e21}."""
    f = field
    mul = [[[f.zero] * 2 for _ in range(2)] for _ in range(2)]
    mul[0][0][0] = f.one  # e*e = e
    mul[1][0][1] = f.one  # f*e = f
    return Algebra(field, 2, mul, labels=["e", "f"])


def change_of_basis(a, p):
    """The same algebra written in the basis given by the columns of p."""
    pinv = inverse(p)
    assert pinv is not None
    f = a.field
    mul = []
    for i in range(a.dim):
        plane = []
        xi = p.col(i)
        for j in range(a.dim):
            prod = a.mul_vec(xi, p.col(j))
            plane.append(list((pinv @ prod).data))
        mul.append(plane)
    unit = None
    if a.is_unital:
        unit = list((pinv @ a.unit).data)
    return Algebra(f, a.dim, mul, unit=unit)


# ---------------------------------------------------------------------------
# ring homomorphisms


class RingHom:
    """Linear map between algebras that is multiplicative on basis pairs."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        assert matrix.rows == target.dim and matrix.cols == source.dim
        self.source = source
        self.target = target
        self.matrix = matrix

    @property
    def preserves_unit(self):
        return (
            self.source.is_unital
            and self.target.is_unital
            and self.matrix @ self.source.unit == self.target.unit
        )

    def __call__(self, v):
        return self.matrix @ v

    def image_subspace(self):
        return span_rows(
            self.matrix.field,
            self.target.dim,
            [self.matrix.col_tuple(j) for j in range(self.source.dim)],
        )

    def __repr__(self):
        return f"RingHom({self.source!r} -> {self.target!r})"


def check_ring_hom(h):
    """Violated multiplicativity identities, empty iff h is a ring map."""
    report = []
    s, t = h.source, h.target
    for i in range(s.dim):
        for j in range(s.dim):
            lhs = h.matrix @ Mat.column(s.field, list(s.mul[i][j]))
            rhs = t.mul_vec(h.matrix.col(i), h.matrix.col(j))
            if lhs != rhs:
                report.append(
                    f"multiplicativity fails at basis pair ({s.labels[i]}, {s.labels[j]})"
                )
    return report


def compose_homs(g, f):
    assert f.target is g.source or f.target == g.source
    return RingHom(f.source, g.target, g.matrix @ f.matrix)


def is_left_ideal_via(hom):
    """True iff T * image(hom) lies inside image(hom) in T = hom.target."""
    img = hom.image_subspace()
    t = hom.target
    for i in range(t.dim):
        for r in range(img.dim):
            x = Mat.column(t.field, list(img.basis.row(r)))
            if not img.contains(t.mul_vec(t.basis_vector(i), x)):
                return False
    return True


# ---------------------------------------------------------------------------
# firmness


class FirmWitness:
    """Two-sided inverse d of the multiplication map A (x)_A A -> A."""

    __slots__ = ("mult_map", "d", "quotient")

    def __init__(self, mult_map, d, q):
        self.mult_map = mult_map
        self.d = d
        self.quotient = q


def tensor_square_over_self(a):
    """Quotient presentation of A (x)_A A from basis-triple relations."""
    f = a.field
    n = a.dim
    amb = n * n
    rels = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # (e_i e_j) (x) e_k - e_i (x) (e_j e_k)
                v = [f.zero] * amb
                for t in range(n):
                    c = a.mul[i][j][t]
                    if c != f.zero:
                        v[t * n + k] = f.add(v[t * n + k], c)
                for t in range(n):
                    c = a.mul[j][k][t]
                    if c != f.zero:
                        v[i * n + t] = f.sub(v[i * n + t], c)
                if any(x != f.zero for x in v):
                    rels.append(v)
    return quotient(amb, span_rows(f, amb, rels))


def is_firm_ring(a):
    """FirmWitness if the multiplication map A (x)_A A -> A is bijective."""
    f = a.field
    n = a.dim
    q = tensor_square_over_self(a)
    raw = Mat.from_fn(f, n, n * n, lambda k, col: a.mul[col // n][col % n][k])
    mult_map = raw @ q.section
    if not (mult_map @ q.projection == raw):
        return None  # multiplication not balanced: impossible for associative a
    if q.dim != n:
        return None
    d = inverse(mult_map)
    if d is None:
        return None
    return FirmWitness(mult_map, d, q)


# ---------------------------------------------------------------------------
# radical and simple modules


def _subspace_product(a, s1, s2):
    """Span of {x*y : x in s1 basis, y in s2 basis}."""
    prods = []
    for i in range(s1.dim):
        x = Mat.column(a.field, list(s1.basis.row(i)))
        lx = a.left_mult(x)
        for j in range(s2.dim):
            y = Mat.column(a.field, list(s2.basis.row(j)))
            prods.append((lx @ y).col_tuple(0))
    return span_rows(a.field, a.dim, prods)


def is_nilpotent_subspace(a, s):
    cur = s
    for _ in range(a.dim + 1):
        if cur.dim == 0:
            return True
        nxt = _subspace_product(a, cur, s)
        if nxt.dim == cur.dim and nxt == cur:
            return False
        cur = nxt
    return cur.dim == 0


def _ideal_closure(a, vectors):
    """Smallest two-sided ideal containing the given column vectors."""
    cur = span_rows(a.field, a.dim, [v.col_tuple(0) for v in vectors])
    while True:
        new_rows = [tuple(cur.basis.row(i)) for i in range(cur.dim)]
        for i in range(cur.dim):
            x = Mat.column(a.field, list(cur.basis.row(i)))
            for b in range(a.dim):
                new_rows.append((a.left_mult_basis(b) @ x).col_tuple(0))
                new_rows.append((a.right_mult_basis(b) @ x).col_tuple(0))
        nxt = span_rows(a.field, a.dim, new_rows)
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt


def _radical_trace_form(a):
    """Kernel of the trace form (valid in char 0 or p > dim)."""
    f = a.field
    t = Mat.from_fn(
        f,
        a.dim,
        a.dim,
        lambda i, j: _trace(a.left_mult(Mat.column(f, list(a.mul[i][j])))),
    )
    return kernel(t.T())


def _trace(m):
    f = m.field
    s = f.zero
    for i in range(m.rows):
        s = f.add(s, m.entry(i, i))
    return s


def _radical_brute(a):
    f = a.field
    count = f.p ** a.dim
    if count > _ENUM_BOUND:
        raise UnsupportedField(
            f"radical search needs {count} candidates over GF({f.p}), above the bound"
        )
    good = []
    for x in a.elements():
        if x.is_zero():
            continue
        ideal = _ideal_closure(a, [x])
        if is_nilpotent_subspace(a, ideal):
            good.append(x.col_tuple(0))
    return span_rows(f, a.dim, good)


def jacobson_radical(a):
    """Largest nilpotent two-sided ideal of a unital algebra.

    Uses the trace form in characteristic 0 or p > dim, otherwise an
    exhaustive nilpotent-ideal search over small finite fields.  The
    result is re-verified (nilpotent ideal, semisimple quotient).
    """
    if not a.is_unital:
        raise UnsupportedField("radical computation requires a unit")
    if a.field.p is None or a.field.p > a.dim:
        j = _radical_trace_form(a)
        if not _radical_ok(a, j):
            if a.field.p is not None:
                j = _radical_brute(a)
            if not _radical_ok(a, j):
                raise UnsupportedField("radical verification failed")
    else:
        j = _radical_brute(a)
        if not _radical_ok(a, j):
            raise UnsupportedField("radical verification failed")
    return j


def _radical_ok(a, j):
    if not is_nilpotent_subspace(a, j):
        return False
    gens = [Mat.column(a.field, list(j.basis.row(i))) for i in range(j.dim)]
    if j.dim > 0 and _ideal_closure(a, gens).dim != j.dim:
        return False
    s, _proj = quotient_algebra(a, j)
    if s.field.p is None or s.field.p > s.dim:
        j2 = _radical_trace_form(s)
    else:
        j2 = _radical_brute(s)
    return j2.dim == 0


def quotient_algebra(a, ideal):
    """(A / ideal, projection matrix)."""
    q = quotient(a.dim, ideal)
    f = a.field
    d = q.dim
    mul = []
    for i in range(d):
        xi = q.section.col(i)
        plane = []
        for j in range(d):
            prod = a.mul_vec(xi, q.section.col(j))
            plane.append(list((q.projection @ prod).data))
        mul.append(plane)
    unit = None
    if a.is_unital:
        unit = list((q.projection @ a.unit).data)
    return Algebra(f, d, mul, unit=unit), q.projection


def center_subspace(a):
    rows = []
    f = a.field
    for j in range(a.dim):
        rows.append(a.left_mult_basis(j) - a.right_mult_basis(j))
    stacked = rows[0]
    for m in rows[1:]:
        stacked = stacked.vstack(m)
    return kernel(stacked)


def _idempotents_enumerated(a, sub):
    """All idempotents of A lying in a subspace (finite field, bounded)."""
    f = a.field
    count = f.p ** sub.dim
    if count > _ENUM_BOUND:
        raise UnsupportedField("idempotent enumeration above bound")
    out = []
    for tup in itertools.product(f.elements(), repeat=sub.dim):
        z = sub.lift(Mat.column(f, list(tup)))
        if a.mul_vec(z, z) == z:
            out.append(z)
    return out


def _min_poly(op_apply, v0, field, maxdim):
    """Minimal polynomial of a linear operator on the cyclic space of v0.

    op_apply: vector -> vector.  Returns coefficient list, lowest degree
    first, with leading coefficient 1.
    """
    vecs = [v0]
    cur = v0
    for _ in range(maxdim):
        cur = op_apply(cur)
        vecs.append(cur)
    n = v0.rows
    for deg in range(1, maxdim + 1):
        m = Mat.from_fn(field, n, deg, lambda i, j: vecs[j].data[i])
        rhs = vecs[deg]
        x = solve(m, rhs)
        if x is not None:
            coeffs = [field.neg(c) for c in x.col_tuple(0)] + [field.one]
            return coeffs
    raise AssertionError("minimal polynomial not found")


def _split_idempotent_char0(a, e, candidates):
    """Search for a proper idempotent below e in the commutative corner eAe.

    Returns an idempotent e1 with e1*e = e*e1 = e1, 0 != e1 != e, or None.
    Relies on minimal polynomials being squarefree in a semisimple
    commutative corner, so any reducible one yields a coprime split.
    """
    from fractions import Fraction

    import sympy

    f = a.field
    x = sympy.Symbol("x")
    for z in candidates:
        # minimal polynomial of multiplication-by-z on the corner through e
        ez = a.mul_vec(a.mul_vec(e, z), e)
        coeffs = _min_poly(lambda v: a.mul_vec(ez, v), e, f, a.dim + 1)
        poly = sympy.Poly(
            sum(sympy.Rational(c) * x**i for i, c in enumerate(coeffs)), x, domain=sympy.QQ
        )
        factors = poly.factor_list()[1]
        if len(factors) < 2:
            continue
        f1 = sympy.Poly(factors[0][0] ** factors[0][1], x, domain=sympy.QQ)
        f2 = poly.quo(f1)
        u, _v, g = sympy.gcdex(f1, f2)
        g = sympy.Poly(g, x, domain=sympy.QQ)
        if g.degree() != 0:
            continue
        uf1 = sympy.Poly(u * f1, x, domain=sympy.QQ).quo(g)
        coeff_list = [Fraction(c.p, c.q) for c in reversed(uf1.all_coeffs())]
        e1 = _eval_poly_at_corner(a, coeff_list, ez, e)
        if a.mul_vec(e1, e1) == e1 and not e1.is_zero() and e1 != e:
            return e1
    return None


def _eval_poly_at_corner(a, coeffs, z, unit_vec):
    """Polynomial in z with 'constant term times unit_vec'."""
    f = a.field
    acc = Mat.zeros(f, a.dim, 1)
    power = unit_vec
    for c in coeffs:
        c = f.normalize(c)
        if c != f.zero:
            acc = acc + power.scale(c)
        power = a.mul_vec(power, z)
    return acc


def central_primitive_idempotents(s):
    """Central primitive idempotents of a semisimple unital algebra."""
    f = s.field
    z = center_subspace(s)
    if f.p and f.p**z.dim <= _ENUM_BOUND:
        idems = [e for e in _idempotents_enumerated(s, z) if not e.is_zero()]
        prim = []
        for e in idems:
            below = [
                g
                for g in idems
                if g != e and s.mul_vec(g, e) == g and s.mul_vec(e, g) == g
            ]
            if not below:
                prim.append(e)
        prim.sort(key=lambda v: v.data)
        total = Mat.zeros(f, s.dim, 1)
        for e in prim:
            total = total + e
        assert total == s.unit, "primitive idempotents must sum to the unit"
        return prim
    if f.p:
        raise UnsupportedField("center too large to enumerate")
    # characteristic 0: split iteratively with minimal polynomials
    cands = [Mat.column(f, list(z.basis.row(i))) for i in range(z.dim)]
    cands += [
        Mat.column(f, list(z.basis.row(i))) + Mat.column(f, list(z.basis.row(j))).scale(c)
        for i in range(z.dim)
        for j in range(z.dim)
        if i != j
        for c in (1, 2, 3)
    ]
    done = []
    todo = [s.unit]
    while todo:
        e = todo.pop()
        e1 = _split_idempotent_char0(s, e, cands)
        if e1 is None:
            done.append(e)
        else:
            todo.append(e1)
            todo.append(e - e1)
    done.sort(key=lambda v: tuple(map(str, v.data)))
    return done


def _right_ideal(a, x):
    rows = [x.col_tuple(0)]
    for b in range(a.dim):
        rows.append((a.right_mult_basis(b) @ x).col_tuple(0))
    return span_rows(a.field, a.dim, rows)


def _minimal_right_ideal_in_block(s, block):
    """Minimal right ideal of s contained in the block subspace."""
    f = s.field
    if f.p is None or f.p**block.dim > _ENUM_BOUND:
        raise UnsupportedField(
            "minimal right ideal search needs enumeration; block too large or field infinite"
        )
    best = None
    for tup in itertools.product(f.elements(), repeat=block.dim):
        x = block.lift(Mat.column(f, list(tup)))
        if x.is_zero():
            continue
        ideal = _right_ideal(s, x)
        if best is None or ideal.dim < best.dim:
            best = ideal
    # verify minimality by exhausting the ideal itself
    for tup in itertools.product(f.elements(), repeat=best.dim):
        y = best.lift(Mat.column(f, list(tup)))
        if y.is_zero():
            continue
        if _right_ideal(s, y) != best:
            raise AssertionError("minimality verification failed")
    return best


def simple_right_modules(a):
    """Complete pairwise non-isomorphic simple right modules of a/J(a).

    Returned as right modules over `a` itself (Bimodule with ground
    field acting on the left).  The Wedderburn dimension count is
    asserted before returning.
    """
    from .bimod import Bimodule  # local import to avoid a cycle

    j = jacobson_radical(a)
    s, proj = quotient_algebra(a, j)
    idems = central_primitive_idempotents(s)
    f = a.field
    modules = []
    check_total = 0
    for e in idems:
        block = span_rows(
            f, s.dim, [(s.left_mult(e) @ s.basis_vector(i)).col_tuple(0) for i in range(s.dim)]
        )
        commutative = _block_commutative(s, block)
        if commutative:
            ideal = block
        else:
            ideal = _minimal_right_ideal_in_block(s, block)
        n_copies, rem = divmod(block.dim, ideal.dim)
        assert rem == 0, "block dimension must be a multiple of the simple dimension"
        check_total += n_copies * ideal.dim
        modules.append(_module_from_right_ideal(a, s, proj, ideal))
    assert check_total == s.dim, "Wedderburn dimension count failed"
    return modules


def _block_commutative(s, block):
    for i in range(block.dim):
        x = Mat.column(s.field, list(block.basis.row(i)))
        for jj in range(i + 1, block.dim):
            y = Mat.column(s.field, list(block.basis.row(jj)))
            if s.mul_vec(x, y) != s.mul_vec(y, x):
                return False
    return True


def _module_from_right_ideal(a, s, proj, ideal):
    """Right a-module structure on a right ideal of the quotient s."""
    from .bimod import Bimodule

    f = a.field
    d = ideal.dim
    right_act = []
    for m in range(d):
        x = Mat.column(f, list(ideal.basis.row(m)))
        plane = []
        for bi in range(a.dim):
            y = s.mul_vec(x, proj @ a.basis_vector(bi))
            coords = ideal.coords(y)
            assert coords is not None, "right ideal not stable"
            plane.append(list(coords.data))
        right_act.append(plane)
    ground = ground_algebra(f)
    left_act = [[[f.one if m == mm else f.zero for mm in range(d)] for m in range(d)]]
    return Bimodule(ground, a, d, left_act, right_act)


def subalgebra_from_subspace(a, sub, require_unit=False):
    """(Algebra on the subspace, inclusion RingHom); the span must be closed."""
    f = a.field
    d = sub.dim
    mul = []
    for i in range(d):
        x = Mat.column(f, list(sub.basis.row(i)))
        plane = []
        for j in range(d):
            y = Mat.column(f, list(sub.basis.row(j)))
            prod = a.mul_vec(x, y)
            coords = sub.coords(prod)
            if coords is None:
                raise ValidationError("subalgebra", "subspace is not closed under multiplication")
            plane.append(list(coords.data))
        mul.append(plane)
    unit = None
    if a.is_unital:
        coords = sub.coords(a.unit)
        if coords is not None:
            unit = list(coords.data)
    if require_unit and unit is None:
        raise ValidationError("subalgebra", "subspace does not contain the unit")
    incl = RingHom(Algebra(f, d, mul, unit=unit), a, sub.basis.T())
    return incl.source, incl
