import json
import random

import pytest

from cellring import hecke
from cellring.cells import cell_c_enumerate, x_element
from cellring.hecke import (
    HeckeElement,
    bernstein_S1,
    bernstein_S2,
    c_basis,
    c_product,
    delta,
    kl_polynomial,
    mu,
    mu_tilde,
    multiply,
    t_basis,
    t_inverse,
    t_inverse_gen,
    t_mul_gen,
    theta,
    to_c_basis,
    to_t_basis,
)
from cellring.laurent import LaurentPoly, ONE
from cellring.weyl import IDENTITY, SIMPLE, TAU, elements_up_to_length, evaluate, length, lower_interval

W012 = evaluate("012012")
Q = LaurentPoly({2: 1})
XI = LaurentPoly({1: 1, -1: 1})


def T(word):
    return t_basis(evaluate(word))


def test_quadratic_relation():
    r = SIMPLE[2]
    got = t_mul_gen(t_basis(r), 2)
    assert got == HeckeElement("T", {IDENTITY: Q, r: Q - 1})
    assert t_mul_gen(t_basis(IDENTITY), 2) == t_basis(r)


def test_length_additive_product():
    h = t_basis(IDENTITY)
    for ch in "2323":
        h = t_mul_gen(h, int(ch), "right")
    assert h == T("2323")


def test_inverse_generator():
    r = SIMPLE[2]
    inv = t_inverse_gen(2)
    assert inv == HeckeElement("T", {r: LaurentPoly({-2: 1}), IDENTITY: LaurentPoly({-2: 1, 0: -1})})
    assert multiply(t_basis(r), inv) == t_basis(IDENTITY)
    prod_inv = multiply(t_inverse_gen(3), t_inverse_gen(2))
    assert prod_inv == t_inverse(evaluate("23"))
    assert multiply(T("23"), prod_inv) == t_basis(IDENTITY)


def test_kl_examples():
    assert kl_polynomial(SIMPLE[2], SIMPLE[2]) == ONE
    assert kl_polynomial(SIMPLE[3], W012) == LaurentPoly()
    assert all(kl_polynomial(y, W012) == ONE for y in lower_interval(W012))
    assert kl_polynomial(TAU, TAU * W012) == ONE


def test_kl_degree_bound_and_mu_shortcut():
    elems = [w for w in elements_up_to_length(7) if w.in_affine_subgroup()]
    for w in elems:
        for y in lower_interval(w):
            if y == w:
                continue
            p = kl_polynomial(y, w)
            assert 2 * p.degree() <= length(w) - length(y) - 1
    # mu(y, w) = 1 iff w = r y, when y < w, r w < w, r y > y
    rng = random.Random(7)
    for w in rng.sample(elems, 40):
        for r in range(4):
            if length(SIMPLE[r] * w) > length(w):
                continue
            for y in lower_interval(w):
                if y != w and length(SIMPLE[r] * y) > length(y):
                    assert (mu(y, w) == 1) == (w == SIMPLE[r] * y)


def test_mu_examples():
    assert mu(IDENTITY, SIMPLE[0]) == 1
    assert mu(IDENTITY, W012) == 0
    y = evaluate("0123")
    assert mu(y, SIMPLE[2] * y) == 1
    assert mu_tilde(SIMPLE[2] * y, y) == 1
    assert mu_tilde(SIMPLE[3], SIMPLE[0]) == 0


def test_c_basis_examples():
    r = SIMPLE[1]
    v_inv = LaurentPoly({-1: 1})
    assert c_basis(r) == HeckeElement("T", {IDENTITY: v_inv, r: v_inv})
    assert c_basis(W012) == HeckeElement("T", {y: LaurentPoly({-6: 1}) for y in lower_interval(W012)})
    for w in (W012, evaluate("0123212"), TAU * evaluate("320")):
        assert to_c_basis(c_basis(w)) == HeckeElement("C", {w: ONE})
        assert to_t_basis(to_c_basis(c_basis(w))) == c_basis(w)


def test_c_r_times_c_w():
    for w in (W012, evaluate("2320"), evaluate("0123")):
        for r in range(4):
            if length(SIMPLE[r] * w) < length(w):
                assert c_product(SIMPLE[r], w) == {w: XI}


def test_eta_and_tau():
    eta = LaurentPoly()
    for u in lower_interval(W012):
        eta = eta + LaurentPoly({2 * length(u) - 6: 1})
    assert c_product(W012, W012) == {W012: eta}
    assert eta.coeff(6) == 1 and eta.degree() == 6
    w = evaluate("01232")
    assert c_product(TAU, w) == {TAU * w: ONE}


def test_associativity_spot_check():
    rng = random.Random(3)
    elems = [w for w in elements_up_to_length(5)]
    for _ in range(6):
        a, b, c = (c_basis(rng.choice(elems)) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_product_support_descents():
    # every z with h_{x,y,z} != 0 has R(y) inside R(z) and L(x) inside L(z)
    from cellring.weyl import left_descents, right_descents
    rng = random.Random(5)
    elems = [w for w in elements_up_to_length(5)]
    for _ in range(15):
        x, y = rng.choice(elems), rng.choice(elems)
        for z in c_product(x, y):
            assert right_descents(y) <= right_descents(z)
            assert left_descents(x) <= left_descents(z)


def test_delta():
    assert delta(IDENTITY) == 0
    assert delta(W012) == 0
    assert delta(SIMPLE[2]) == 0


def test_theta():
    assert theta((0, 0, 0)) == t_basis(IDENTITY)
    x1 = (1, 0, 0)
    assert multiply(theta(x1), theta((-1, 0, 0))) == t_basis(IDENTITY)
    t = hecke.translation(x1)
    assert theta(x1) == t_basis(t).scale(LaurentPoly({-length(t): 1}))
    for wt in ((1, -1, 0), (0, 1, -1), (-1, 2, 0)):
        assert theta(wt) == theta(wt, extra=(1, 1, 0))
        assert multiply(theta(wt), theta(x1)) == theta(tuple(a + b for a, b in zip(wt, x1)))


@pytest.mark.slow
def test_bernstein_elements():
    s1, s2 = bernstein_S1(), bernstein_S2()
    for s in (s1, s2):
        for r in range(4):
            c = c_basis(SIMPLE[r])
            assert multiply(s, c) == multiply(c, s)
    win = cell_c_enumerate(22)
    x10, x01 = x_element(1, 0), x_element(0, 1)
    got1 = to_c_basis(multiply(s1, c_basis(W012)))
    got2 = to_c_basis(multiply(s2, c_basis(W012)))
    assert {z: p for z, p in got1.terms.items() if z in win} == {x10: ONE, TAU * W012: -XI}
    assert {z: p for z, p in got2.terms.items() if z in win} == {x01: ONE, TAU * x10: -XI, W012: ONE}


def test_json_round_trip():
    h = c_basis(evaluate("0123"))
    again = HeckeElement.from_json(json.loads(json.dumps(h.to_json())))
    assert again == h
    assert h.to_json()["basis"] == "T"


def test_disk_cache(tmp_path):
    path = str(tmp_path / "kl.jsonl")
    w = evaluate("01232")
    try:
        hecke.use_cache(path)
        first = kl_polynomial(IDENTITY, w)
        hecke.use_cache(path)
        assert kl_polynomial(IDENTITY, w) == first
        with open(path) as fh:
            header = json.loads(fh.readline())
        assert header == {"format": 1, "type": "B3~"}
    finally:
        hecke.use_cache(None)
