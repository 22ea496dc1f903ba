"""Right comodules over a coring, comodule Hom, endomorphism rings,
cotensor products.

A comodule is a right module X with a coaction rho: X -> X (x)_A C
subject to coassociativity and the counit law, the latter against the
firm inverse of the right multiplication X (x)_A A -> X.  Comodule maps
are plain matrices validated after the fact; all categorical content
reduces to kernels of explicit matrices.
"""

from __future__ import annotations

from .bimod import (
    BimoduleMap,
    chain_map,
    check_bimodule_map,
    equalizer_in_mod,
    hom_right,
    mult_map,
    regular_bimodule,
    right_module_of_algebra,
    submodule,
    tensor_chain,
)
from .errors import NotFirm, UnitRequired, ValidationError
from .exactla import Mat, inverse, kernel
from .rings import Algebra, RingHom


class Comodule:
    """Pair (carrier, rho) over a coring; carrier may carry a left action."""

    __slots__ = ("coring", "carrier", "rho", "t_xc")

    def __init__(self, coring, carrier, rho):
        self.coring = coring
        self.carrier = carrier
        self.t_xc = tensor_chain((carrier, coring.carrier))
        assert rho.rows == self.t_xc.result.dim and rho.cols == carrier.dim
        self.rho = rho

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self):
        return self.carrier.dim

    def __repr__(self):
        return f"Comodule(dim {self.dim} over {self.coring!r})"


def check_comodule(x):
    """Violated coaction identities; empty iff x is a comodule.

    When the carrier has a nontrivial left algebra the left-linearity of
    rho (the bicomodule condition) is checked as well.
    """
    report = []
    c = x.coring
    rho_map = BimoduleMap(x.carrier, x.t_xc.result, x.rho)
    report += ["coaction: " + line for line in check_bimodule_map(rho_map)]
    if report:
        return report
    ident_x = Mat.identity(x.field, x.dim)
    ident_c = Mat.identity(x.field, c.dim)
    t_xcc = tensor_chain((x.carrier, c.carrier, c.carrier))
    lhs = chain_map(x.t_xc, t_xcc, [(0, 1, 0, 2, x.rho), (1, 2, 2, 3, ident_c)]) @ x.rho
    rhs = chain_map(x.t_xc, t_xcc, [(0, 1, 0, 1, ident_x), (1, 2, 1, 3, c.delta)]) @ x.rho
    if lhs != rhs:
        report.append(f"coaction coassociativity fails at basis vector {_bad_col(lhs, rhs)}")
    areg = regular_bimodule(c.base)
    t_xa = tensor_chain((x.carrier, areg))
    counit_side = chain_map(x.t_xc, t_xa, [(0, 1, 0, 1, ident_x), (1, 2, 1, 2, c.eps)]) @ x.rho
    try:
        ch, w = mult_map(x.carrier, "right")
        d = inverse(w) if ch.result.dim == x.dim else None
        if d is None:
            raise NotFirm("comodule carrier is not firm as a right module")
        if counit_side != d:
            report.append(f"coaction counit law fails at basis vector {_bad_col(counit_side, d)}")
    except NotFirm as e:
        report.append(str(e))
    return report


def _bad_col(a, b):
    for j in range(a.cols):
        if a.col(j) != b.col(j):
            return j
    return -1


def validate_comodule(x, name="comodule"):
    bad = check_comodule(x)
    if bad:
        raise ValidationError(name, bad[0])


def check_comodule_map(f, x, y):
    """True iff f: x -> y commutes with the coactions and right actions."""
    if check_bimodule_map(BimoduleMap(x.carrier, y.carrier, f), check_left=False):
        return False
    ident_c = Mat.identity(x.field, x.coring.dim)
    pushed = chain_map(x.t_xc, y.t_xc, [(0, 1, 0, 1, f), (1, 2, 1, 2, ident_c)])
    return y.rho @ f == pushed @ x.rho


# ---------------------------------------------------------------------------
# standard comodules


def coring_as_comodule(c):
    """C itself with coaction delta."""
    return Comodule(c, c.carrier, c.delta)


def comodule_from_grouplike(gl):
    """A with coaction a |-> g . a, through A (x)_A C ~ C."""
    c = gl.coring
    a = c.base
    if not a.is_unital:
        raise UnitRequired("a group-like coaction on A needs a unit")
    f = c.field
    x = right_module_of_algebra(a)
    ccar = c.carrier
    m1 = Mat.from_cols(f, [list((ccar.right_action_basis(i) @ gl.g).data) for i in range(a.dim)])
    ch = tensor_chain((x, ccar))
    # multiplication A (x)_A C -> C (left action on the carrier)
    raw = Mat.from_cols(
        f,
        [
            list((ccar.left_action_basis(i) @ Mat.unit_column(f, c.dim, j)).data)
            for i in range(a.dim)
            for j in range(c.dim)
        ],
    )
    w = raw @ ch.q.section
    assert w @ ch.q.projection == raw, "multiplication must descend"
    winv = inverse(w)
    if winv is None:
        raise NotFirm("coring carrier is not firm over the base")
    return Comodule(c, x, winv @ m1)


def with_left_action(x, b, left_mats):
    """Upgrade a comodule carrier to a (b, A)-bimodule; rho must stay linear."""
    from .bimod import bimodule_from_matrices, check_bimodule

    carrier = bimodule_from_matrices(
        b, x.carrier.right_alg, x.dim, left_mats,
        [x.carrier.right_action_basis(a) for a in range(x.carrier.right_alg.dim)],
    )
    bad = check_bimodule(carrier)
    if bad:
        raise ValidationError("bicomodule carrier", bad[0])
    out = Comodule(x.coring, carrier, x.rho)
    rep = check_comodule(out)
    if rep:
        raise ValidationError("bicomodule", rep[0])
    return out


def coinvariants(gl):
    """{a in A : a g = g a} as a subspace of A."""
    c = gl.coring
    a = c.base
    if not a.is_unital:
        raise UnitRequired("coinvariants need a unital base")
    f = c.field
    cols = []
    for i in range(a.dim):
        diff = c.carrier.left_action_basis(i) @ gl.g - c.carrier.right_action_basis(i) @ gl.g
        cols.append(list(diff.data))
    m = Mat.from_cols(f, cols)
    return kernel(m)


def coinvariant_algebra(gl):
    """The coinvariants as a subalgebra, with its inclusion."""
    from .rings import subalgebra_from_subspace

    sub = coinvariants(gl)
    return subalgebra_from_subspace(gl.coring.base, sub, require_unit=True)


# ---------------------------------------------------------------------------
# comodule Hom


class ComodHom:
    """Hom over the coring as a submodule of the right-linear Hom."""

    __slots__ = ("sigma", "x", "base", "module", "incl", "maps")

    def __init__(self, sigma, x, base, module, incl, maps):
        self.sigma = sigma
        self.x = x
        self.base = base
        self.module = module
        self.incl = incl
        self.maps = maps

    @property
    def dim(self):
        return self.module.dim

    def coords_of(self, mat):
        full = self.base.coords_of(mat)
        from .exactla import solve

        c = solve(self.incl, full)
        assert c is not None, "map is not comodule-linear"
        return c

    def as_map(self, coords):
        return self.base.as_map(self.incl @ coords)


def hom_comodules(sigma, x):
    """Equalizer presentation of the comodule Hom from sigma to x."""
    assert sigma.coring is x.coring or sigma.coring == x.coring
    c = sigma.coring
    h1 = hom_right(sigma.carrier, x.carrier)
    h2 = hom_right(sigma.carrier, x.t_xc.result)
    f = sigma.field
    ident_c = Mat.identity(f, c.dim)
    t_sc = sigma.t_xc
    cols1, cols2 = [], []
    for r in range(h1.dim):
        fr = h1.maps[r]
        cols1.append(list(h2.coords_of(x.rho @ fr).data))
        pushed = chain_map(t_sc, x.t_xc, [(0, 1, 0, 1, fr), (1, 2, 1, 2, ident_c)])
        cols2.append(list(h2.coords_of(pushed @ sigma.rho).data))
    if h1.dim:
        o1 = Mat.from_cols(f, cols1)
        o2 = Mat.from_cols(f, cols2)
        map1 = BimoduleMap(h1.module, h2.module, o1)
        map2 = BimoduleMap(h1.module, h2.module, o2)
        sub, incl = equalizer_in_mod(map1, map2)
    else:
        sub, incl = submodule(h1.module, kernel(Mat.zeros(f, 1, 0)))
    maps = tuple(h1.as_map(incl.matrix.col(i)) for i in range(sub.dim))
    return ComodHom(sigma, x, h1, sub, incl.matrix, maps)


class EndRing:
    """T = End over the coring, with multiplication = composition."""

    __slots__ = ("algebra", "reps", "hom")

    def __init__(self, algebra, reps, hom):
        self.algebra = algebra
        self.reps = reps
        self.hom = hom


def end_ring(sigma):
    """Endomorphism algebra of a comodule, acting on the left."""
    ch = hom_comodules(sigma, sigma)
    f = sigma.field
    d = ch.dim
    mul = []
    for i in range(d):
        plane = []
        for j in range(d):
            comp = ch.maps[i] @ ch.maps[j]
            plane.append(list(ch.coords_of(comp).data))
        mul.append(plane)
    unit = list(ch.coords_of(Mat.identity(f, sigma.dim)).data)
    t = Algebra(f, d, mul, unit=unit, labels=[f"t{i}" for i in range(d)])
    return EndRing(t, ch.maps, ch)


def lambda_hom(sigma, t):
    """Left multiplication B -> T for a bicomodule carrier."""
    b = sigma.carrier.left_alg
    cols = []
    for i in range(b.dim):
        cols.append(list(t.hom.coords_of(sigma.carrier.left_action_basis(i)).data))
    return RingHom(b, t.algebra, Mat.from_cols(sigma.field, cols))


def cyclic_subcomodule(x, v):
    """A subcomodule of x containing v, from first-leg closure.

    Lifts the coaction through the canonical section and adjoins the
    first-leg components until stable; the final restriction of rho is
    solved through the tensored inclusion and verified.
    """
    from .exactla import solve, span_rows
    from .bimod import chain_map

    f = x.field
    c = x.coring
    w = span_rows(f, x.dim, [v.col_tuple(0)])
    while True:
        rows = [tuple(w.basis.row(i)) for i in range(w.dim)]
        new = list(rows)
        for i in range(w.dim):
            vec = Mat.column(f, list(w.basis.row(i)))
            img = x.t_xc.q.section @ (x.rho @ vec)
            for q in range(c.dim):
                comp = tuple(img.data[p * c.dim + q] for p in range(x.dim))
                if any(e != f.zero for e in comp):
                    new.append(comp)
        w2 = span_rows(f, x.dim, new)
        if w2.dim == w.dim:
            break
        w = w2
    carrier, incl = submodule(x.carrier, w)
    t_wc = tensor_chain((carrier, c.carrier))
    ident_c = Mat.identity(f, c.dim)
    incl_t = chain_map(t_wc, x.t_xc, [(0, 1, 0, 1, incl.matrix), (1, 2, 1, 2, ident_c)])
    restricted = solve(incl_t, x.rho @ incl.matrix)
    if restricted is None or incl_t @ restricted != x.rho @ incl.matrix:
        raise NotFirm("cyclic closure did not produce a subcomodule")
    out = Comodule(c, carrier, restricted)
    rep = check_comodule(out)
    if rep:
        raise ValidationError("cyclic subcomodule", rep[0])
    return out


# ---------------------------------------------------------------------------
# cotensor


def cotensor(x, dagger_carrier, alpha):
    """Equalizer X (x)_A dagger => X (x)_A C (x)_A dagger of the two
    coaction-induced maps; a right module over dagger's right algebra."""
    c = x.coring
    f = x.field
    t_xd = tensor_chain((x.carrier, dagger_carrier))
    t_xcd = tensor_chain((x.carrier, c.carrier, dagger_carrier))
    ident_x = Mat.identity(f, x.dim)
    ident_d = Mat.identity(f, dagger_carrier.dim)
    m1 = chain_map(t_xd, t_xcd, [(0, 1, 0, 1, ident_x), (1, 2, 1, 3, alpha)])
    m2 = chain_map(t_xd, t_xcd, [(0, 1, 0, 2, x.rho), (1, 2, 2, 3, ident_d)])
    f1 = BimoduleMap(t_xd.result, t_xcd.result, m1)
    f2 = BimoduleMap(t_xd.result, t_xcd.result, m2)
    sub, incl = equalizer_in_mod(f1, f2)
    return sub, incl
