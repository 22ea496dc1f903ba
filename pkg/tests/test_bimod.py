import itertools
import random

from coringlab.exactla import GF, QQ, Mat, kernel, kron
from coringlab.bimod import (
    Bimodule,
    BimoduleMap,
    check_bimodule,
    check_bimodule_map,
    chain_map,
    direct_sum,
    equalizer_in_mod,
    ground_alg,
    hom_right,
    induced_map,
    is_faithfully_flat,
    is_fg_projective,
    is_firm_module,
    is_flat,
    left_module_of_algebra,
    mult_map,
    reflects_isos_probe,
    regroup,
    regular_bimodule,
    right_module_of_algebra,
    tensor_chain,
    tensor_over,
    vector_module,
)
from coringlab.rings import (
    f4_algebra,
    ground_algebra,
    null_algebra,
    product_algebra,
    row_matrix_algebra,
    truncated_poly_algebra,
)

F2 = GF(2)
F3 = GF(3)
Q = QQ()


def twisted_f4_module():
    """F4 as a right F4-module via the frobenius twist u . a := u a^2."""
    a = f4_algebra()
    frob = Mat.from_rows(F2, [[1, 1], [0, 1]])
    right = []
    for i in range(2):
        plane = []
        for ai in range(2):
            tw = frob.col(ai)  # a^2 in coordinates
            plane.append(list(a.mul_vec(Mat.unit_column(F2, 2, i), tw).data))
        right.append(plane)
    g = ground_alg(F2)
    left = [[[F2.one if i == j else F2.zero for j in range(2)] for i in range(2)]]
    return Bimodule(g, a, 2, left, right)


# ---------------------------------------------------------------------------
# bimodule validity


def test_regular_bimodule_valid():
    for alg in [f4_algebra(), row_matrix_algebra(F2), null_algebra(F3, 2)]:
        assert check_bimodule(regular_bimodule(alg)) == []


def test_twisted_module_valid():
    assert check_bimodule(twisted_f4_module()) == []


def test_check_map_detects_violation():
    a = f4_algebra()
    m = regular_bimodule(a)
    bad = BimoduleMap(m, m, Mat.from_rows(F2, [[1, 1], [0, 1]]))  # frobenius: not A-linear
    assert check_bimodule_map(bad) != []
    good = BimoduleMap(m, m, Mat.identity(F2, 2))
    assert check_bimodule_map(good) == []


# ---------------------------------------------------------------------------
# tensor products


def test_tensor_unital_self():
    a = f4_algebra()
    reg = regular_bimodule(a)
    t = tensor_over(reg, reg)
    assert t.result.dim == 2


def test_tensor_over_ground_field_no_relations():
    a = f4_algebra()
    m = right_module_of_algebra(a)  # (k, A)
    n = left_module_of_algebra(a)  # (A, k)
    t = tensor_over(n, m)  # over k? no: (A,k) x (k,A) over k
    assert t.result.dim == 4


def test_tensor_row_ring_dim_two():
    b = row_matrix_algebra(F2)
    reg = regular_bimodule(b)
    t = tensor_over(reg, reg)
    assert t.result.dim == 2


def oracle_tensor_dim(m, n):
    """Independent balancing-relations oracle with its own elimination."""
    f = m.field
    a = m.right_alg
    amb = m.dim * n.dim
    rows = []
    for i in range(m.dim):
        for ai in range(a.dim):
            for j in range(n.dim):
                v = [f.zero] * amb
                for t in range(m.dim):
                    v[t * n.dim + j] = f.add(v[t * n.dim + j], m.right_act[i][ai][t])
                for t in range(n.dim):
                    v[i * n.dim + t] = f.sub(v[i * n.dim + t], n.left_act[ai][j][t])
                rows.append(v)
    # local gaussian elimination, written independently of exactla.rref
    rank = 0
    ncols = amb
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] != f.zero:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = f.inv(rows[rank][col])
        rows[rank] = [f.mul(inv, x) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != f.zero:
                c = rows[r][col]
                rows[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return amb - rank


def test_tensor_dim_against_oracle_row_ring():
    b = row_matrix_algebra(F2)
    reg = regular_bimodule(b)
    assert tensor_over(reg, reg).result.dim == oracle_tensor_dim(reg, reg) == 2


def test_induced_map_identity_and_zero():
    a = f4_algebra()
    reg = regular_bimodule(a)
    t = tensor_over(reg, reg)
    ident = Mat.identity(F2, 2)
    assert induced_map(ident, ident, t, t).is_identity()
    z = Mat.zeros(F2, 2, 2)
    assert induced_map(ident, z, t, t).is_zero()


def test_induced_map_frobenius_pure_tensor_oracle():
    # on A (x)_{F2} A the map frob (x) id must agree with its action on
    # all sixteen pure tensors
    a = f4_algebra()
    m = left_module_of_algebra(a)   # (A, k)
    n = right_module_of_algebra(a)  # (k, A)
    t = tensor_over(m, n)
    frob = Mat.from_rows(F2, [[1, 1], [0, 1]])
    ident = Mat.identity(F2, 2)
    got = chain_map(t.chain, t.chain, [(0, 1, 0, 1, frob), (1, 2, 1, 2, ident)])
    proj = t.quotient.projection
    for x_bits in itertools.product(range(2), repeat=2):
        for y_bits in itertools.product(range(2), repeat=2):
            x = Mat.column(F2, list(x_bits))
            y = Mat.column(F2, list(y_bits))
            pure = kron(x, y)
            lhs = got @ (proj @ pure)
            rhs = proj @ kron(frob @ x, y)
            assert lhs == rhs


def test_chain_regroup_is_iso():
    a = f4_algebra()
    reg = regular_bimodule(a)
    t2 = tensor_chain((reg, reg))
    left_outer = tensor_chain((t2.result, reg))
    flat = tensor_chain((reg, reg, reg))
    u = regroup(left_outer, flat, [(0, 1, 0, 2), (1, 2, 2, 3)])
    from coringlab.exactla import inverse

    assert inverse(u) is not None


def test_chain_two_bracketings_agree():
    # associator: ((M x N) x P) -> (M x (N x P)) through the flat chain
    b = row_matrix_algebra(F2)
    reg = regular_bimodule(b)
    t2 = tensor_chain((reg, reg))
    left_outer = tensor_chain((t2.result, reg))
    right_outer = tensor_chain((reg, t2.result))
    flat = tensor_chain((reg, reg, reg))
    u = regroup(left_outer, flat, [(0, 1, 0, 2), (1, 2, 2, 3)])
    v = regroup(right_outer, flat, [(0, 1, 0, 1), (1, 2, 1, 3)])
    from coringlab.exactla import inverse

    assert inverse(u) is not None and inverse(v) is not None
    assert u.rows == flat.result.dim


# ---------------------------------------------------------------------------
# Hom


def test_hom_regular_unital():
    a = f4_algebra()
    reg = regular_bimodule(a)
    hs = hom_right(reg, reg)
    assert hs.dim == 2  # left multiplications


def test_hom_f4_as_f2_space():
    a = f4_algebra()
    m = right_module_of_algebra(a)
    hs = hom_right(m, m)
    assert hs.dim == 2


def test_hom_plain_dual():
    v2 = vector_module(F2, 2)
    v1 = vector_module(F2, 1)
    assert hom_right(v2, v1).dim == 2


def test_hom_action_axioms():
    a = f4_algebra()
    reg = regular_bimodule(a)
    hs = hom_right(reg, reg)
    assert check_bimodule(hs.module) == []


# ---------------------------------------------------------------------------
# firmness of modules


def test_unital_module_firm():
    a = f4_algebra()
    m = right_module_of_algebra(a)
    d = is_firm_module(m, "right")
    assert d is not None
    ch, w = mult_map(m, "right")
    assert (w @ d).is_identity() and (d @ w).is_identity()


def test_null_action_not_firm():
    b = null_algebra(F2, 2)
    m = right_module_of_algebra(b)
    assert is_firm_module(m, "right") is None


def test_row_ring_left_firm():
    b = row_matrix_algebra(F2)
    m = regular_bimodule(b)
    assert is_firm_module(m, "left") is not None


# ---------------------------------------------------------------------------
# equalizers


def test_equalizer_equal_maps():
    a = f4_algebra()
    m = regular_bimodule(a)
    f = BimoduleMap(m, m, Mat.identity(F2, 2))
    sub, incl = equalizer_in_mod(f, f)
    assert sub.dim == 2


def test_equalizer_id_vs_zero():
    a = f4_algebra()
    m = regular_bimodule(a)
    f = BimoduleMap(m, m, Mat.identity(F2, 2))
    g = BimoduleMap(m, m, Mat.zeros(F2, 2, 2))
    sub, incl = equalizer_in_mod(f, g)
    assert sub.dim == 0


def test_equalizer_universality():
    # any map equalizing the pair factors uniquely through the inclusion
    a = f4_algebra()
    m = right_module_of_algebra(a)
    two = direct_sum(m, m)
    swap = Mat.from_rows(F2, [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    f = BimoduleMap(two, two, swap)
    g = BimoduleMap(two, two, Mat.identity(F2, 4))
    sub, incl = equalizer_in_mod(f, g)
    assert sub.dim == 2  # diagonal
    # the diagonal embedding equalizes, so it factors through incl
    diag = Mat.from_rows(F2, [[1, 0], [0, 1], [1, 0], [0, 1]])
    from coringlab.exactla import solve

    fac = solve(incl.matrix, diag)
    assert fac is not None and incl.matrix @ fac == diag
    assert kernel(incl.matrix).dim == 0  # factorization unique


# ---------------------------------------------------------------------------
# projectivity


def test_fgp_regular():
    a = f4_algebra()
    m = right_module_of_algebra(a)
    db = is_fg_projective(m)
    assert db is not None and db.count == 2


def test_fgp_plain_plane():
    db = is_fg_projective(vector_module(Q, 2))
    assert db is not None and db.count == 2


def test_fgp_twisted():
    db = is_fg_projective(twisted_f4_module())
    assert db is not None


def test_dual_basis_identity():
    sigma = twisted_f4_module()
    db = is_fg_projective(sigma)
    a = sigma.right_alg
    for u_bits in itertools.product(range(2), repeat=2):
        u = Mat.column(F2, list(u_bits))
        total = Mat.zeros(F2, 2, 1)
        for e, estar in zip(db.elements, db.functionals):
            coeff = estar @ u  # element of A
            total = total + sigma.right_action(coeff) @ e
        assert total == u


# ---------------------------------------------------------------------------
# flatness battery


def test_regular_module_flat():
    b = f4_algebra()
    sigma = left_module_of_algebra(b)
    assert is_flat(b, sigma)


def test_dual_numbers_augmentation_not_flat():
    b = truncated_poly_algebra(F2, 2)
    # sigma = k with x acting as zero
    g = ground_alg(F2)
    left = [[[1]], [[0]]]
    right = [[[1]]]
    sigma = Bimodule(b, g, 1, left, right)
    assert not is_flat(b, sigma)


def test_f4_over_f2_flat():
    b = ground_algebra(F2)
    a = f4_algebra()
    sigma = Bimodule(b, a, 2, [[[1, 0], [0, 1]]], regular_bimodule(a).right_act)
    assert is_flat(b, sigma)
    assert is_faithfully_flat(b, sigma)


def test_projection_to_factor_flat_not_faithfully():
    b = product_algebra(ground_algebra(F2), ground_algebra(F2))
    # sigma = first factor as a left b-module
    left = [[[1]], [[0]]]  # e1 acts as 1, e2 as 0
    g = ground_alg(F2)
    sigma = Bimodule(b, g, 1, left, [[[1]]])
    assert is_flat(b, sigma)
    assert not is_faithfully_flat(b, sigma)


def test_reflects_isos():
    b = f4_algebra()
    sigma = left_module_of_algebra(b)
    assert reflects_isos_probe(b, sigma)


def test_zero_module_does_not_reflect():
    b = f4_algebra()
    g = ground_alg(F2)
    sigma = Bimodule(b, g, 0, [[], []], [])
    assert not reflects_isos_probe(b, sigma)


def test_factor_projection_does_not_reflect():
    b = product_algebra(ground_algebra(F2), ground_algebra(F2))
    left = [[[1]], [[0]]]
    g = ground_alg(F2)
    sigma = Bimodule(b, g, 1, left, [[[1]]])
    assert not reflects_isos_probe(b, sigma)


# ---------------------------------------------------------------------------
# random dimension agreement (small version; the acceptance suite scales up)


def _random_algebra(rng, field):
    from coringlab.rings import (
        change_of_basis,
        ground_algebra,
        null_algebra,
        product_algebra,
        truncated_poly_algebra,
    )
    from coringlab.exactla import inverse

    kind = rng.randrange(5)
    if kind == 0:
        a = ground_algebra(field)
    elif kind == 1:
        a = truncated_poly_algebra(field, rng.randint(2, 3))
    elif kind == 2:
        a = product_algebra(ground_algebra(field), ground_algebra(field))
    elif kind == 3:
        a = null_algebra(field, rng.randint(1, 2))
    else:
        a = truncated_poly_algebra(field, 2)
    if a.dim <= 3:
        while True:
            p = Mat(field, a.dim, a.dim,
                    [field.normalize(rng.randint(-2, 2)) for _ in range(a.dim * a.dim)])
            if inverse(p) is not None:
                return change_of_basis(a, p)
    return a


def _random_right_module(rng, a, dim):
    # quotients and submodules of free modules give valid right modules;
    # here: a random direct summand pattern of A^k truncated to `dim` is
    # overkill, so use A^1 basis-changed when dims allow, else trivial acts
    from coringlab.exactla import inverse

    f = a.field
    g = ground_alg(f)
    if dim == a.dim:
        m = right_module_of_algebra(a)
        while True:
            p = Mat(f, dim, dim, [f.normalize(rng.randint(-2, 2)) for _ in range(dim * dim)])
            pinv = inverse(p)
            if pinv is not None:
                break
        rmats = [pinv @ m.right_action_basis(i) @ p for i in range(a.dim)]
        from coringlab.bimod import bimodule_from_matrices

        return bimodule_from_matrices(g, a, dim, [Mat.identity(f, dim)], rmats)
    # trivial action module (valid when non-unital checks are skipped)
    z = [[[f.zero] * dim for _ in range(a.dim)] for _ in range(dim)]
    if a.is_unital:
        # act through the augmentation-like projection onto unit coefficient:
        # right action u . x = u * coeff(x along unit) is only associative for
        # special algebras, so fall back to the regular module padded/cut is
        # not valid either; use zero action only for non-unital nil algebras.
        return None
    return Bimodule(g, a, dim, [[[f.one if i == j else f.zero for j in range(dim)] for i in range(dim)]], z)


def test_random_bracketings_agree():
    # for random algebras and regular-module chains, both iterated
    # two-step tensor products are isomorphic to the flat chain through
    # verified identity-content base changes, and the outer actions
    # transported through those base changes coincide
    from coringlab.exactla import inverse

    rng = random.Random(424242)
    for field in [F2, F3]:
        for _ in range(6):
            a = _random_algebra(rng, field)
            reg = regular_bimodule(a)
            t12 = tensor_chain((reg, reg))
            left_outer = tensor_chain((t12.result, reg))
            right_outer = tensor_chain((reg, t12.result))
            flat = tensor_chain((reg, reg, reg))
            u = regroup(left_outer, flat, [(0, 1, 0, 2), (1, 2, 2, 3)])
            v = regroup(right_outer, flat, [(0, 1, 0, 1), (1, 2, 1, 3)])
            assert inverse(u) is not None and inverse(v) is not None
            for b in range(a.dim):
                lhs = u @ left_outer.result.left_action_basis(b)
                rhs = flat.result.left_action_basis(b) @ u
                assert lhs == rhs
                lhs2 = v @ right_outer.result.right_action_basis(b)
                rhs2 = flat.result.right_action_basis(b) @ v
                assert lhs2 == rhs2


def test_tensor_dim_random_agreement():
    rng = random.Random(20240601)
    checked = 0
    for field in [F2, F3, Q]:
        for _ in range(12):
            a = _random_algebra(rng, field)
            m = _random_right_module(rng, a, a.dim)
            if m is None:
                continue
            n_mod = left_module_of_algebra(a)
            t = tensor_over(m, n_mod)
            assert t.result.dim == oracle_tensor_dim(m, n_mod)
            checked += 1
    assert checked >= 30
