"""Seeded random instance generators.

Randomness enters only through explicit seeds, and every generated
object is valid by construction (structured families composed with
random base changes), so generated suites are reproducible and never
waste samples on invalid structure constants.
"""

from __future__ import annotations

import itertools
import random

from .bimod import (
    cyclic_submodule,
    ground_alg,
    left_module_of_algebra,
    quotient_module,
    right_module_of_algebra,
    submodule,
    tensor_chain,
    vector_module,
)
from .comod import Comodule, check_comodule, with_left_action
from .corings import Coring, check_coring
from .exactla import GF, Mat, inverse
from .rings import (
    change_of_basis,
    extension_field_algebra,
    ground_algebra,
    null_algebra,
    product_algebra,
    row_matrix_algebra,
    truncated_poly_algebra,
)

F2 = GF(2)


def _random_invertible(rng, field, n):
    while True:
        p = Mat(field, n, n, [field.normalize(rng.randint(-2, 2)) for _ in range(n * n)])
        if inverse(p) is not None:
            return p


def random_algebra(rng, field, max_dim=3):
    """A valid algebra of dimension <= max_dim in a random basis."""
    pool = [ground_algebra(field), truncated_poly_algebra(field, 2)]
    if max_dim >= 3:
        pool.append(truncated_poly_algebra(field, 3))
    pool.append(product_algebra(ground_algebra(field), ground_algebra(field)))
    pool.append(null_algebra(field, rng.randint(1, 2)))
    if field.p == 2:
        pool.append(extension_field_algebra(field, [1, 1]))
        pool.append(row_matrix_algebra(field))
    a = pool[rng.randrange(len(pool))]
    if a.dim > max_dim:
        a = ground_algebra(field)
    return change_of_basis(a, _random_invertible(rng, field, a.dim))


def random_right_module(rng, a, max_dim=3):
    """Right module over a: derived from the regular module by cyclic
    submodules, quotients and a random basis change."""
    m = right_module_of_algebra(a)
    for _ in range(rng.randrange(3)):
        choice = rng.randrange(3)
        if choice == 0 and m.dim > 0:
            v = Mat(a.field, m.dim, 1,
                    [a.field.normalize(rng.randint(0, 2)) for _ in range(m.dim)])
            sub = cyclic_submodule(m, v)
            if 0 < sub.dim < m.dim:
                m, _ = submodule(m, sub)
        elif choice == 1 and m.dim > 0:
            v = Mat(a.field, m.dim, 1,
                    [a.field.normalize(rng.randint(0, 2)) for _ in range(m.dim)])
            sub = cyclic_submodule(m, v)
            if 0 < sub.dim < m.dim:
                m, _ = quotient_module(m, sub)
    if m.dim > max_dim or m.dim == 0:
        m = right_module_of_algebra(a)
    if m.dim > max_dim:
        return None
    p = _random_invertible(rng, a.field, m.dim)
    pinv = inverse(p)
    rmats = [pinv @ m.right_action_basis(i) @ p for i in range(a.dim)]
    from .bimod import bimodule_from_matrices

    return bimodule_from_matrices(ground_alg(a.field), a, m.dim,
                                  [Mat.identity(a.field, m.dim)], rmats)


def random_left_module(rng, a, max_dim=3):
    m = left_module_of_algebra(a)
    if m.dim > max_dim:
        return None
    p = _random_invertible(rng, a.field, m.dim)
    pinv = inverse(p)
    lmats = [pinv @ m.left_action_basis(i) @ p for i in range(a.dim)]
    from .bimod import bimodule_from_matrices

    return bimodule_from_matrices(a, ground_alg(a.field), m.dim, lmats,
                                  [Mat.identity(a.field, m.dim) for _ in range(1)])


def random_bimodule_pairs(seed, count, fields):
    """(algebra, right module, left module) triples for tensor tests."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        field = fields[rng.randrange(len(fields))]
        a = random_algebra(rng, field)
        m = random_right_module(rng, a)
        n = random_left_module(rng, a)
        if m is None or n is None:
            continue
        out.append((a, m, n))
    return out


# ---------------------------------------------------------------------------
# random coring instances over F2


def _all_small_corings():
    """Every coring structure on a one- or two-dimensional F2 space."""
    a = ground_algebra(F2)
    out = []
    for dim in (1, 2):
        carrier = vector_module(F2, dim)
        t_cc = tensor_chain((carrier, carrier))
        cdim2 = t_cc.result.dim
        for delta_bits in itertools.product(range(2), repeat=cdim2 * dim):
            delta = Mat(F2, cdim2, dim, list(delta_bits))
            for eps_bits in itertools.product(range(2), repeat=dim):
                eps = Mat(F2, 1, dim, list(eps_bits))
                c = Coring(a, carrier, delta, eps)
                if check_coring(c) == []:
                    out.append(c)
    return out


_SMALL_CORINGS = None


def small_corings():
    global _SMALL_CORINGS
    if _SMALL_CORINGS is None:
        _SMALL_CORINGS = _all_small_corings()
    return _SMALL_CORINGS


def comodule_structures_on_point(coring):
    """All coactions making the base field a comodule over the coring."""
    x = right_module_of_algebra(ground_algebra(F2))
    t = tensor_chain((x, coring.carrier))
    out = []
    for bits in itertools.product(range(2), repeat=t.result.dim):
        rho = Mat(F2, t.result.dim, 1, list(bits))
        cand = Comodule(coring, x, rho)
        if check_comodule(cand) == []:
            out.append(cand)
    return out


def random_coring_instances(seed, count):
    """Seeded draws of (coring, bicomodule sigma) over B = A = F2."""
    rng = random.Random(seed)
    corings = small_corings()
    b = ground_algebra(F2)
    out = []
    while len(out) < count:
        c = corings[rng.randrange(len(corings))]
        rhos = comodule_structures_on_point(c)
        if not rhos:
            continue
        x = rhos[rng.randrange(len(rhos))]
        sigma = with_left_action(x, b, [Mat.identity(F2, 1)])
        out.append((c, sigma))
    return out
