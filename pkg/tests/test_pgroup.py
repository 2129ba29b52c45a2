"""The finite p-group witness family: relations, classes, and the twist map."""

import random

import pytest

from raag.pgroup import (
    PGroupElement,
    WitnessGroup,
    WitnessParams,
    build_witness_group,
    conjugacy_class,
    phi,
    verify_relations,
)

CONFIRMED = [(2, 2, 1, 1), (3, 2, 1, 1), (2, 3, 1, 2), (2, 3, 2, 1)]


@pytest.fixture(params=CONFIRMED, ids=lambda t: "p%dn%dr%ds%d" % t)
def group(request):
    return build_witness_group(WitnessParams(*request.param))


def test_invalid_params_rejected():
    with pytest.raises(ValueError):
        WitnessParams(4, 2, 1, 1)
    with pytest.raises(ValueError):
        WitnessParams(2, 1, 1, 1)
    with pytest.raises(ValueError):
        WitnessParams(2, 2, 2, 1)
    with pytest.raises(ValueError):
        WitnessParams(2, 2, 1, 0)


def test_orders(group):
    p = group.params
    assert p.order_a == p.p ** (p.n + p.s * (p.p**p.r - 1) + p.r)
    assert p.order_b == p.p ** (p.n + p.s * (p.p**p.r - 1) + 2 * p.r)


def test_small_case_orders():
    params = WitnessParams(2, 2, 1, 1)
    assert params.order_a == 16
    assert params.order_b == 32


def test_alpha_order_is_p_to_r(group):
    p = group.params
    assert group.alpha_order() == p.p**p.r


def test_alpha_fixes_last_generator(group):
    m = group.params.m
    xm = group.generator(m - 1)
    assert group.alpha_apply(xm.vector) == xm.vector


def test_alpha_squared_test_vector():
    # for m >= 4: alpha^2(x1) = x1 x2 x3 xm^2
    for tup in ((3, 2, 1, 1), (2, 3, 2, 1)):
        params = WitnessParams(*tup)
        group = WitnessGroup(params)
        m = params.m
        got = group.alpha_apply(group.phi("g").vector, 2)
        expect = [0] * m
        expect[0] = expect[1] = expect[2] = 1
        expect[m - 1] = 2
        assert got == group.element(expect).vector


def test_relations_hold(group):
    assert group.verify_relations()


def test_corrupted_alpha_breaks_relations():
    params = WitnessParams(2, 3, 2, 1)
    group = WitnessGroup(params)
    group.alpha_matrix[0][params.m - 1] = 0
    assert not group.verify_relations()


def test_group_laws(group):
    rng = random.Random(7)
    els = []
    for _ in range(6):
        vec = [rng.randrange(q) for q in group.moduli]
        els.append(group.element(vec, rng.randrange(group.params.p**group.params.r)))
    one = group.identity()
    for x in els:
        assert group.multiply(x, group.inverse(x)) == one
        assert group.multiply(one, x) == x
    for x, y, z in zip(els, els[1:], els[2:]):
        left = group.multiply(group.multiply(x, y), z)
        right = group.multiply(x, group.multiply(y, z))
        assert left == right


def test_element_normalization(group):
    p = group.params
    wrapped = group.element((p.p**p.n,) + (0,) * (p.m - 1), p.p**p.r)
    assert wrapped == group.identity()
    with pytest.raises(ValueError):
        group.element((0,) * (p.m + 1))


def test_conjugation_of_a_part_twists_only(group):
    # (b, j)(a, 0)(b, j)^-1 = (alpha^j(a), 0) regardless of b
    rng = random.Random(11)
    for _ in range(5):
        a = group.element([rng.randrange(q) for q in group.moduli])
        j = rng.randrange(group.params.p**group.params.r)
        b = group.element([rng.randrange(q) for q in group.moduli], j)
        got = group.conjugate(a, b)
        assert got == group.element(group.alpha_apply(a.vector, j))


def test_class_of_g_matches_formula(group):
    p = group.params
    g = group.phi("g")
    cls = group.conjugacy_class(g)
    formula = {
        group.element(group.alpha_apply(g.vector, k)) for k in range(p.p**p.r)
    }
    assert cls == formula
    assert len(cls) == p.p**p.r


def test_images_of_g_and_h_not_conjugate(group):
    cls = group.conjugacy_class(group.phi("g"))
    assert group.phi("h") not in cls


def test_class_of_identity(group):
    assert group.conjugacy_class(group.identity()) == {group.identity()}


def test_phi_images():
    params = WitnessParams(2, 2, 1, 1)
    assert phi("g", params) == PGroupElement((1, 0, 0), 0)
    assert phi("h", params) == PGroupElement((1, 0, 1), 0)
    assert phi("t", params) == PGroupElement((0, 0, 0), 1)
    with pytest.raises(ValueError):
        phi("x", params)


def test_module_level_wrappers():
    params = WitnessParams(2, 2, 1, 1)
    assert verify_relations(params)
    cls = conjugacy_class(phi("g", params), params)
    assert len(cls) == 2


def test_enumeration_guard():
    params = WitnessParams(2, 19, 1, 1)
    group = build_witness_group(params)
    with pytest.raises(ValueError):
        group.conjugacy_class(group.identity())
