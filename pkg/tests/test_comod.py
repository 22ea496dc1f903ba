import itertools

from coringlab.exactla import GF, QQ, Mat, inverse
from coringlab.bimod import (
    is_fg_projective,
    mult_map,
    tensor_chain,
    vector_module,
)
from coringlab.comod import (
    Comodule,
    check_comodule,
    check_comodule_map,
    coinvariant_algebra,
    coinvariants,
    comodule_from_grouplike,
    coring_as_comodule,
    cotensor,
    end_ring,
    hom_comodules,
    lambda_hom,
    with_left_action,
)
from coringlab.corings import comatrix_coring, sweedler_coring, trivial_coring
from coringlab.rings import (
    RingHom,
    check_algebra,
    check_ring_hom,
    f4_algebra,
    ground_algebra,
    product_algebra,
)

F2 = GF(2)
Q = QQ()


def i2_parts():
    """Sweedler coring of F2 in F4 with its group-like comodule."""
    b = ground_algebra(F2)
    a = f4_algebra()
    iota = RingHom(b, a, Mat.from_rows(F2, [[1], [0]]))
    c, gl = sweedler_coring(iota)
    sigma0 = comodule_from_grouplike(gl)
    sigma = with_left_action(sigma0, b, [Mat.identity(F2, 2)])
    return b, a, iota, c, gl, sigma


def i5_parts():
    """Trivial coring on F4 with A as its canonical comodule, B = F2."""
    b = ground_algebra(F2)
    a = f4_algebra()
    c = trivial_coring(a)
    from coringlab.corings import Grouplike

    gl = Grouplike(c, a.unit)
    sigma0 = comodule_from_grouplike(gl)
    sigma = with_left_action(sigma0, b, [Mat.identity(F2, 2)])
    return b, a, c, gl, sigma


def i3_parts():
    """Comatrix coring on k^2 over k = Q."""
    k = ground_algebra(Q)
    sigma_bim = vector_module(Q, 2)
    db = is_fg_projective(sigma_bim)
    c = comatrix_coring(k, sigma_bim, db)
    # comatrix coaction u |-> sum_i e_i (x) (e_i* (x) u)
    from coringlab.bimod import hom_right, regular_bimodule
    from coringlab.exactla import kron

    star = hom_right(sigma_bim, regular_bimodule(k))
    ch = tensor_chain((star.module, sigma_bim))
    t_sc = tensor_chain((sigma_bim, c.carrier))
    f = Q
    cols = []
    for s in range(2):
        acc = Mat.zeros(f, t_sc.result.dim, 1)
        for e, estar in zip(db.elements, db.functionals):
            inner = ch.q.projection @ kron(star.coords_of(estar), Mat.unit_column(f, 2, s))
            acc = acc + t_sc.q.projection @ kron(e, inner)
        cols.append(list(acc.data))
    rho = Mat.from_cols(f, cols)
    sigma = Comodule(c, sigma_bim, rho)
    return k, c, sigma


# ---------------------------------------------------------------------------
# comodule laws


def test_trivial_coring_canonical_comodule():
    a = f4_algebra()
    c = trivial_coring(a)
    from coringlab.corings import Grouplike

    x = comodule_from_grouplike(Grouplike(c, a.unit))
    assert check_comodule(x) == []


def test_i2_comodule_valid_and_matches_pattern():
    b, a, iota, c, gl, sigma = i2_parts()
    assert check_comodule(sigma) == []
    # rho followed by the multiplication iso sends a_j to 1 (x) a_j
    ch, w = mult_map(sigma.carrier, "right")
    # instead check through the chain with the coring carrier:
    t = sigma.t_xc
    raw_mult_cols = []
    for i in range(2):
        for j in range(c.dim):
            raw_mult_cols.append(
                list((c.carrier.left_action_basis(i) @ Mat.unit_column(F2, c.dim, j)).data)
            )
    raw = Mat.from_cols(F2, raw_mult_cols)
    wmap = raw @ t.q.section
    m1 = wmap @ sigma.rho  # columns: g . a_j in C coordinates
    assert m1.col(0) == Mat.column(F2, [1, 0, 0, 0])  # 1 (x) 1
    assert m1.col(1) == Mat.column(F2, [0, 1, 0, 0])  # 1 (x) w


def test_corrupted_rho_reported():
    b, a, iota, c, gl, sigma = i2_parts()
    bad_rho = sigma.rho + sigma.rho @ Mat.from_rows(F2, [[0, 0], [1, 0]])
    bad = Comodule(c, sigma.carrier, bad_rho)
    report = check_comodule(bad)
    assert report != []


def test_coring_as_comodule_valid():
    b, a, iota, c, gl, sigma = i2_parts()
    assert check_comodule(coring_as_comodule(c)) == []


# ---------------------------------------------------------------------------
# coinvariants


def test_i2_coinvariants_is_f2():
    b, a, iota, c, gl, sigma = i2_parts()
    sub = coinvariants(gl)
    assert sub.dim == 1
    # brute force over all four elements of F4
    hits = []
    for bits in itertools.product(range(2), repeat=2):
        v = Mat.column(F2, list(bits))
        ag = c.carrier.left_action(v) @ gl.g
        ga = c.carrier.right_action(v) @ gl.g
        if ag == ga:
            hits.append(bits)
    assert sorted(hits) == [(0, 0), (1, 0)]
    alg, incl = coinvariant_algebra(gl)
    assert alg.dim == 1 and alg.is_unital


def test_f2xf2_coinvariants_diagonal():
    b = ground_algebra(F2)
    a = product_algebra(ground_algebra(F2), ground_algebra(F2))
    iota = RingHom(b, a, Mat.from_rows(F2, [[1], [1]]))
    c, gl = sweedler_coring(iota)
    sub = coinvariants(gl)
    assert sub.dim == 1
    assert sub.contains(Mat.column(F2, [1, 1]))


def test_trivial_coring_coinvariants_everything():
    a = f4_algebra()
    c = trivial_coring(a)
    from coringlab.corings import Grouplike

    assert coinvariants(Grouplike(c, a.unit)).dim == 2


# ---------------------------------------------------------------------------
# Hom over the coring, end ring


def test_i2_end_ring_is_f2():
    b, a, iota, c, gl, sigma = i2_parts()
    h = hom_comodules(sigma, sigma)
    assert h.dim == 1
    t = end_ring(sigma)
    assert t.algebra.dim == 1
    assert check_algebra(t.algebra) == []
    lam = lambda_hom(sigma, t)
    assert check_ring_hom(lam) == []
    assert inverse(lam.matrix) is not None  # iso onto T


def test_i5_end_ring_is_f4():
    b, a, c, gl, sigma = i5_parts()
    t = end_ring(sigma)
    assert t.algebra.dim == 2
    assert check_algebra(t.algebra) == []
    lam = lambda_hom(sigma, t)
    assert check_ring_hom(lam) == []
    assert lam.matrix.rank() == 1  # not surjective


def test_trivial_coring_hom_is_plain_hom():
    b, a, c, gl, sigma = i5_parts()
    from coringlab.bimod import hom_right

    h = hom_comodules(sigma, sigma)
    plain = hom_right(sigma.carrier, sigma.carrier)
    assert h.dim == plain.dim


def test_hom_into_cofree_matches_plain_hom():
    # two independent code paths: comodule maps into the cofree comodule
    # C = G(A) versus plain right-linear maps into A; the adjunction says
    # the dimensions agree (here: 2 over F2, the dual of the module)
    from coringlab.bimod import hom_right, right_module_of_algebra

    b, a, iota, c, gl, sigma = i2_parts()
    cx = coring_as_comodule(c)
    h_comod = hom_comodules(sigma, cx)
    h_plain = hom_right(sigma.carrier, right_module_of_algebra(a))
    assert h_comod.dim == h_plain.dim == 2


def test_i3_hom_and_end_ring():
    k, c, sigma = i3_parts()
    cx = coring_as_comodule(c)
    h = hom_comodules(sigma, cx)
    assert h.dim == 2
    t = end_ring(sigma)
    assert t.algebra.dim == 1
    assert check_algebra(t.algebra) == []


def test_hom_naturality_squares():
    # for a comodule map f, composing with the inclusion commutes
    b, a, iota, c, gl, sigma = i2_parts()
    cx = coring_as_comodule(c)
    h = hom_comodules(sigma, cx)
    # probe comodule map: right multiplication by an element of A on C
    for i in range(a.dim):
        f = c.carrier.right_action_basis(i)
        if not check_comodule_map(f, cx, cx):
            continue
        for r in range(h.dim):
            composed = f @ h.maps[r]
            # composed is again comodule-linear, so it has coordinates
            c2 = h.coords_of(composed)
            assert h.as_map(c2) == composed


# ---------------------------------------------------------------------------
# cotensor


def test_cotensor_trivial_coring_gives_x():
    b, a, c, gl, sigma = i5_parts()
    x = coring_as_comodule(c)
    dagger = c.carrier  # A as (A, A)-bimodule
    alpha = c.d_minus()
    sub, incl = cotensor(x, dagger, alpha)
    assert sub.dim == x.dim


def test_cotensor_dimensions_on_i2():
    from coringlab.galois import GaloisInstance, alpha_sigma_dagger
    from coringlab.instances import build_i2

    inst = GaloisInstance(build_i2())
    alpha = alpha_sigma_dagger(inst)
    # at the cofree comodule C the cotensor is the dagger dual itself
    cx = coring_as_comodule(inst.coring)
    sub_c, _ = cotensor(cx, inst.dagger.carrier, alpha)
    assert sub_c.dim == inst.dagger.carrier.dim == 2
    # at the module itself it recovers the base ring
    sub_s, _ = cotensor(inst.sigma, inst.dagger.carrier, alpha)
    assert sub_s.dim == 1


def test_comodule_map_checker():
    b, a, iota, c, gl, sigma = i2_parts()
    cx = coring_as_comodule(c)
    assert check_comodule_map(Mat.identity(F2, c.dim), cx, cx)
    z = Mat.zeros(F2, c.dim, c.dim)
    assert check_comodule_map(z, cx, cx)  # zero map is a comodule map
    # psi(1 (x) 1) = 1 (x) w, psi(w (x) 1) = 0 is right-linear but moves
    # the group-like the wrong way, so it fails comodule linearity
    psi = Mat.from_cols(F2, [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    from coringlab.bimod import BimoduleMap, check_bimodule_map

    assert check_bimodule_map(
        BimoduleMap(cx.carrier, cx.carrier, psi), check_left=False
    ) == []
    assert not check_comodule_map(psi, cx, cx)
