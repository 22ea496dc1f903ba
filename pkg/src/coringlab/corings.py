"""Corings over firm algebras and the standard constructors.

A coring is a comonoid in (A, A)-bimodules: a carrier C with a
comultiplication delta: C -> C (x)_A C and counit eps: C -> A subject
to coassociativity and the two counit laws, the latter stated against
the firm inverses d of the multiplication maps A (x)_A C -> C and
C (x)_A A -> C.  Everything is stored post-composed with the canonical
quotient projections, so every axiom is a plain matrix equality.
"""

from __future__ import annotations

from .bimod import (
    BimoduleMap,
    chain_map,
    check_bimodule_map,
    hom_right,
    mult_map,
    regular_bimodule,
    tensor_chain,
    bimodule_from_matrices,
)
from .errors import NotFirm, UnitRequired, ValidationError
from .exactla import Mat, inverse, kron
from .rings import RingHom


class Coring:
    """Carrier bimodule with comultiplication and counit matrices."""

    __slots__ = ("base", "carrier", "delta", "eps", "t_cc", "_d_plus", "_d_minus")

    def __init__(self, base, carrier, delta, eps):
        self.base = base
        self.carrier = carrier
        self.t_cc = tensor_chain((carrier, carrier))
        assert delta.rows == self.t_cc.result.dim and delta.cols == carrier.dim
        assert eps.rows == base.dim and eps.cols == carrier.dim
        self.delta = delta
        self.eps = eps
        self._d_plus = None
        self._d_minus = None

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self):
        return self.carrier.dim

    def d_plus(self):
        """Inverse of C (x)_A A -> C; NotFirm if the carrier is not firm."""
        if self._d_plus is None:
            ch, w = mult_map(self.carrier, "right")
            d = inverse(w) if ch.result.dim == self.carrier.dim else None
            if d is None:
                raise NotFirm("coring carrier is not firm as a right module")
            self._d_plus = d
        return self._d_plus

    def d_minus(self):
        if self._d_minus is None:
            ch, w = mult_map(self.carrier, "left")
            d = inverse(w) if ch.result.dim == self.carrier.dim else None
            if d is None:
                raise NotFirm("coring carrier is not firm as a left module")
            self._d_minus = d
        return self._d_minus

    def __repr__(self):
        return f"Coring(dim {self.dim} over {self.base!r})"


def check_coring(c):
    """Violated coring identities, each localized to a basis vector."""
    report = []
    areg = regular_bimodule(c.base)
    report += [
        "comultiplication: " + line
        for line in check_bimodule_map(BimoduleMap(c.carrier, c.t_cc.result, c.delta))
    ]
    report += [
        "counit: " + line
        for line in check_bimodule_map(BimoduleMap(c.carrier, areg, c.eps))
    ]
    if report:
        # the diagram checks only make sense for genuine bimodule maps
        return report
    t3 = tensor_chain((c.carrier, c.carrier, c.carrier))
    ident = Mat.identity(c.field, c.dim)
    left_expand = chain_map(c.t_cc, t3, [(0, 1, 0, 2, c.delta), (1, 2, 2, 3, ident)])
    right_expand = chain_map(c.t_cc, t3, [(0, 1, 0, 1, ident), (1, 2, 1, 3, c.delta)])
    lhs = left_expand @ c.delta
    rhs = right_expand @ c.delta
    if lhs != rhs:
        col = _first_bad_column(lhs, rhs)
        report.append(f"coassociativity fails at basis vector {col}")
    t_ac = tensor_chain((areg, c.carrier))
    t_ca = tensor_chain((c.carrier, areg))
    eps_left = chain_map(c.t_cc, t_ac, [(0, 1, 0, 1, c.eps), (1, 2, 1, 2, ident)]) @ c.delta
    eps_right = chain_map(c.t_cc, t_ca, [(0, 1, 0, 1, ident), (1, 2, 1, 2, c.eps)]) @ c.delta
    try:
        if eps_left != c.d_minus():
            report.append(
                f"left counit law fails at basis vector {_first_bad_column(eps_left, c.d_minus())}"
            )
        if eps_right != c.d_plus():
            report.append(
                f"right counit law fails at basis vector {_first_bad_column(eps_right, c.d_plus())}"
            )
    except NotFirm as e:
        report.append(str(e))
    return report


def _first_bad_column(a, b):
    for j in range(a.cols):
        if a.col(j) != b.col(j):
            return j
    return -1


def validate_coring(c, name="coring"):
    bad = check_coring(c)
    if bad:
        raise ValidationError(name, bad[0])


# ---------------------------------------------------------------------------
# constructors


def trivial_coring(a):
    """C = A with delta the firm inverse and eps the identity."""
    carrier = regular_bimodule(a)
    ch, w = mult_map(carrier, "right")
    if ch.result.dim != a.dim:
        raise NotFirm("algebra is not firm; no trivial coring")
    d = inverse(w)
    if d is None:
        raise NotFirm("algebra is not firm; no trivial coring")
    return Coring(a, carrier, d, Mat.identity(a.field, a.dim))


class Grouplike:
    """Element g with delta(g) = g (x) g and eps(g) = 1."""

    __slots__ = ("coring", "g")

    def __init__(self, coring, g):
        self.coring = coring
        self.g = g

    def __repr__(self):
        return f"Grouplike({tuple(self.coring.field.show(x) for x in self.g.data)})"


def is_grouplike(c, g):
    if not c.base.is_unital:
        raise UnitRequired("group-like elements need a unital base algebra")
    pure = c.t_cc.q.projection @ kron(g, g)
    return c.delta @ g == pure and c.eps @ g == c.base.unit


def grouplike_scan(c):
    """All group-like elements by brute force; finite fields, small dims."""
    from .errors import UnsupportedField

    f = c.field
    if not f.p or f.p**c.dim > 4096:
        raise UnsupportedField("group-like scan needs a small finite carrier")
    import itertools

    out = []
    for tup in itertools.product(f.elements(), repeat=c.dim):
        g = Mat.column(f, list(tup))
        if is_grouplike(c, g):
            out.append(g)
    return out


def _iota_bimodules(iota):
    """A as (A, B)- and (B, A)-bimodule through a ring map B -> A."""
    a = iota.target
    b = iota.source
    areg = regular_bimodule(a)
    left_b = [a.left_mult(iota.matrix.col(i)) for i in range(b.dim)]
    right_b = [a.right_mult(iota.matrix.col(i)) for i in range(b.dim)]
    m_ab = bimodule_from_matrices(a, b, a.dim, [areg.left_action_basis(i) for i in range(a.dim)], right_b)
    m_ba = bimodule_from_matrices(b, a, a.dim, left_b, [areg.right_action_basis(i) for i in range(a.dim)])
    return m_ab, m_ba


def sweedler_coring(iota):
    """(A (x)_B A, a (x) a' -> (a (x) 1) (x) (1 (x) a'), multiplication), with
    its canonical group-like 1 (x) 1."""
    a = iota.target
    if not a.is_unital:
        raise UnitRequired("the canonical coring of a ring extension needs a unit")
    f = a.field
    m_ab, m_ba = _iota_bimodules(iota)
    ch = tensor_chain((m_ab, m_ba))
    carrier = ch.result
    proj = ch.q.projection
    n = a.dim
    one = a.unit
    t_cc = tensor_chain((carrier, carrier))
    cols = []
    eps_cols = []
    for i in range(n):
        ei = Mat.unit_column(f, n, i)
        for j in range(n):
            ej = Mat.unit_column(f, n, j)
            c1 = proj @ kron(ei, one)
            c2 = proj @ kron(one, ej)
            cols.append(list((t_cc.q.projection @ kron(c1, c2)).data))
            eps_cols.append(list(a.mul_vec(ei, ej).data))
    delta_raw = Mat.from_cols(f, cols)
    eps_raw = Mat.from_cols(f, eps_cols)
    delta = delta_raw @ ch.q.section
    eps = eps_raw @ ch.q.section
    if delta @ proj != delta_raw or eps @ proj != eps_raw:
        raise ValidationError("sweedler coring", "structure maps do not descend")
    coring = Coring(a, carrier, delta, eps)
    g = proj @ kron(one, one)
    return coring, Grouplike(coring, g)


def comatrix_coring(b, sigma, db):
    """Dual (x) module coring on Hom(sigma, A) (x)_B sigma.

    delta(phi (x) u) = sum_i (phi (x) e_i) (x) (e_i* (x) u) over the
    dual basis; eps is evaluation.
    """
    a = sigma.right_alg
    if not a.is_unital:
        raise UnitRequired("comatrix coring needs a unital base")
    f = sigma.field
    star = hom_right(sigma, regular_bimodule(a))
    ch = tensor_chain((star.module, sigma))
    carrier = ch.result
    proj = ch.q.projection
    t_cc = tensor_chain((carrier, carrier))
    elem_coords = [sigma.basis_vector(i) for i in range(sigma.dim)]
    func_coords = [star.coords_of(e) for e in db.functionals]
    cols = []
    eps_cols = []
    for r in range(star.dim):
        for s in range(sigma.dim):
            acc = Mat.zeros(f, t_cc.result.dim, 1)
            for e_vec, estar_c in zip(db.elements, func_coords):
                c1 = proj @ kron(Mat.unit_column(f, star.dim, r), e_vec)
                c2 = proj @ kron(estar_c, Mat.unit_column(f, sigma.dim, s))
                acc = acc + t_cc.q.projection @ kron(c1, c2)
            cols.append(list(acc.data))
            eps_cols.append(list((star.maps[r] @ Mat.unit_column(f, sigma.dim, s)).data))
    delta_raw = Mat.from_cols(f, cols)
    eps_raw = Mat.from_cols(f, eps_cols)
    delta = delta_raw @ ch.q.section
    eps = eps_raw @ ch.q.section
    if delta @ proj != delta_raw or eps @ proj != eps_raw:
        raise ValidationError("comatrix coring", "structure maps do not descend")
    return Coring(a, carrier, delta, eps)


def comatrix_coring_firm(r, sigma, dagger_adj):
    """Comatrix coring of a firm bimodule through its dagger dual.

    `dagger_adj` is the dagger adjunction; the comultiplication is the
    unit evaluated at the dagger dual, written out in the canonical
    chain presentations, and the counit is the evaluation map.
    """
    from .bimod import is_firm_module, regroup

    dag = dagger_adj.dagger
    a = sigma.right_alg
    if is_firm_module(sigma, "left") is None:
        raise NotFirm("sigma must be firm as a left module")
    ch = tensor_chain((dag.carrier, sigma))
    carrier = ch.result
    f = sigma.field
    eta = dagger_adj.eta(dag.carrier)  # dagger -> (dagger . sigma) . dagger
    rld = dagger_adj.R_chain(dagger_adj.L_ob(dag.carrier))
    step1 = chain_map(ch, tensor_chain((rld.result, sigma)),
                      [(0, 1, 0, 1, eta), (1, 2, 1, 2, Mat.identity(f, sigma.dim))])
    flat3 = tensor_chain((carrier, dag.carrier, sigma))
    step2 = regroup(tensor_chain((rld.result, sigma)), flat3,
                    [(0, 1, 0, 2), (1, 2, 2, 3)])
    t_cc = tensor_chain((carrier, carrier))
    step3 = chain_map(flat3, t_cc,
                      [(0, 1, 0, 1, Mat.identity(f, carrier.dim)),
                       (1, 3, 1, 2, Mat.identity(f, carrier.dim))])
    delta = step3 @ step2 @ step1
    return Coring(a, carrier, delta, dag.ev)


def check_coring_morphism(f, src, dst):
    """True iff f commutes with both comultiplications and counits."""
    m = f.matrix if isinstance(f, BimoduleMap) else f
    ff = chain_map(src.t_cc, dst.t_cc, [(0, 1, 0, 1, m), (1, 2, 1, 2, m)])
    return dst.delta @ m == ff @ src.delta and dst.eps @ m == src.eps


def coring_hom_from_ring_hom(iota):
    """Convenience: the inclusion-induced data for sweedler corings."""
    return RingHom(iota.source, iota.target, iota.matrix)
