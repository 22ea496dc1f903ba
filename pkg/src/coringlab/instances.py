"""The five standing instances every verifier runs against.

  i1_trivial      -- everything one-dimensional over F_2.
  i2_f4_over_f2   -- the canonical coring of F_2 in F_4 with its
                     group-like; the standing positive example.
  i3_comatrix_k2  -- the matrix coalgebra on a plane over Q via the
                     dual-basis construction.
  i4_row_ring     -- the non-unital firm row ring; firmness corpus only.
  i5_trivial_f4   -- the trivial coring on F_4 with base ring F_2; the
                     standing negative (non-Galois) example.
"""

from __future__ import annotations

from .bimod import hom_right, regular_bimodule, tensor_chain, vector_module
from .comod import Comodule, comodule_from_grouplike, with_left_action
from .corings import Grouplike, comatrix_coring, sweedler_coring, trivial_coring
from .exactla import GF, QQ, Mat, kron
from .rings import RingHom, f4_algebra, ground_algebra, row_matrix_algebra


class InstanceParts:
    """Loose bundle of the data a Galois instance is assembled from."""

    def __init__(self, label, field, a=None, b=None, iota=None, coring=None,
                 grouplike=None, sigma=None, extras=None):
        self.label = label
        self.field = field
        self.a = a
        self.b = b
        self.iota = iota
        self.coring = coring
        self.grouplike = grouplike
        self.sigma = sigma
        self.extras = extras or {}


def comatrix_coaction(sigma_bim, coring, db):
    """The canonical coaction u |-> sum_i e_i (x) (e_i* (x) u) on a
    finitely generated projective module over its comatrix coring."""
    f = sigma_bim.field
    a = sigma_bim.right_alg
    star = hom_right(sigma_bim, regular_bimodule(a))
    ch = tensor_chain((star.module, sigma_bim))
    t_sc = tensor_chain((sigma_bim, coring.carrier))
    cols = []
    for s in range(sigma_bim.dim):
        acc = Mat.zeros(f, t_sc.result.dim, 1)
        for e, estar in zip(db.elements, db.functionals):
            inner = ch.q.projection @ kron(star.coords_of(estar), Mat.unit_column(f, sigma_bim.dim, s))
            acc = acc + t_sc.q.projection @ kron(e, inner)
        cols.append(list(acc.data))
    return Mat.from_cols(f, cols)


def build_i1():
    f = GF(2)
    k = ground_algebra(f)
    coring = trivial_coring(k)
    gl = Grouplike(coring, k.unit)
    sigma0 = comodule_from_grouplike(gl)
    sigma = with_left_action(sigma0, k, [Mat.identity(f, 1)])
    return InstanceParts("i1_trivial", f, a=k, b=k,
                         iota=RingHom(k, k, Mat.identity(f, 1)),
                         coring=coring, grouplike=gl, sigma=sigma)


def build_i2():
    f = GF(2)
    b = ground_algebra(f)
    a = f4_algebra()
    iota = RingHom(b, a, Mat.from_rows(f, [[1], [0]]))
    coring, gl = sweedler_coring(iota)
    sigma0 = comodule_from_grouplike(gl)
    sigma = with_left_action(sigma0, b, [Mat.identity(f, 2)])
    return InstanceParts("i2_f4_over_f2", f, a=a, b=b, iota=iota,
                         coring=coring, grouplike=gl, sigma=sigma)


def build_i3():
    f = QQ()
    k = ground_algebra(f)
    sigma_bim = vector_module(f, 2)
    from .bimod import is_fg_projective

    db = is_fg_projective(sigma_bim)
    coring = comatrix_coring(k, sigma_bim, db)
    rho = comatrix_coaction(sigma_bim, coring, db)
    sigma = Comodule(coring, sigma_bim, rho)
    return InstanceParts("i3_comatrix_k2", f, a=k, b=k,
                         iota=RingHom(k, k, Mat.identity(f, 1)),
                         coring=coring, sigma=sigma, extras={"dual_basis": db})


def build_i4():
    f = GF(2)
    return InstanceParts("i4_row_ring", f, a=row_matrix_algebra(f))


def build_i5():
    f = GF(2)
    b = ground_algebra(f)
    a = f4_algebra()
    coring = trivial_coring(a)
    gl = Grouplike(coring, a.unit)
    sigma0 = comodule_from_grouplike(gl)
    sigma = with_left_action(sigma0, b, [Mat.identity(f, 2)])
    iota = RingHom(b, a, Mat.from_rows(f, [[1], [0]]))
    return InstanceParts("i5_trivial_f4", f, a=a, b=b, iota=iota,
                         coring=coring, grouplike=gl, sigma=sigma)


BUILDERS = {
    "i1_trivial": build_i1,
    "i2_f4_over_f2": build_i2,
    "i3_comatrix_k2": build_i3,
    "i4_row_ring": build_i4,
    "i5_trivial_f4": build_i5,
}
