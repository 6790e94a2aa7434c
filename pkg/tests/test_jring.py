import pytest

from cellring.cells import LEFT_CELLS, cell_c_enumerate, distinguished_involution, x_element
from cellring.jring import (
    GammaTable,
    JElement,
    WindowTooSmall,
    gamma,
    recursion_closure,
    rule_x01,
    rule_x10,
    string_samples,
    t_multiply,
    verify_commutativity,
    verify_gamma_symmetries,
    verify_string_identities,
)
from cellring.repring import IrrClass, tensor
from cellring.weyl import TAU, evaluate

W012 = evaluate("012012")


def params_row(table, x, y):
    win = table.window
    return {win.lookup(z).params: g for z, g in table.row(x, y).items()}


def t(table, i, j, eps=0, cells=("G012", "G012")):
    return JElement.basis(table.window.by_params[(cells[0], cells[1], i, j, eps)])


def test_gamma_examples():
    assert gamma(W012, W012, W012) == 1
    assert gamma(x_element(1, 0), x_element(0, 0), x_element(1, 0)) == 1
    assert gamma(x_element(0, 1), x_element(0, 1), x_element(0, 1)) == 0


def test_both_routes_agree(table30):
    x10, x00, x01 = x_element(1, 0), x_element(0, 0), x_element(0, 1)
    for x, y in ((x10, x00), (x10, x10), (x01, x00), (TAU * x10, x00)):
        assert table30.row(x, y) == table30.row_hecke(x, y)
    assert table30.gamma_hecke(x10, x10, x_element(2, 0)) == 1


def test_t_multiply_examples(table30):
    assert t_multiply(t(table30, 1, 0), t(table30, 1, 0), 30, table30) == (
        t(table30, 2, 0) + t(table30, 0, 1) + t(table30, 0, 0)
    )
    assert t_multiply(t(table30, 0, 1), t(table30, 0, 1), 30, table30) == (
        t(table30, 0, 2) + t(table30, 2, 0) + t(table30, 0, 0)
    )


def test_product_rules_on_window(table30):
    win = table30.window
    x10 = win.by_params[("G012", "G012", 1, 0, 0)]
    x01 = win.by_params[("G012", "G012", 0, 1, 0)]
    for i, j in ((0, 0), (1, 0), (0, 1)):
        y = win.by_params[("G012", "G012", i, j, 0)]
        assert {k[:2]: g for k, g in params_row(table30, x10, y).items()} == rule_x10(i, j)
        assert {k[:2]: g for k, g in params_row(table30, x01, y).items()} == rule_x01(i, j)


def test_unit_on_g012_block(table30):
    d = distinguished_involution("G012", 12)
    for p in table30.window.block("G012", "G012"):
        if p.i + p.j <= 1:
            assert table30.row(d, p.element) == {p.element: 1}
            assert table30.row(p.element, d) == {p.element: 1}


def test_support_constraints(table30):
    pts = [p for p in table30.window.points if p.length <= 10]
    for x in pts:
        for y in pts:
            row = table30.row(x, y)
            if y.right_cell != x.left_cell:
                assert row == {}
                continue
            for z in row:
                q = table30.window.lookup(z)
                assert (q.left_cell, q.right_cell) == (y.left_cell, x.right_cell)
                assert row[z] > 0


def test_window_too_small():
    small = GammaTable(cell_c_enumerate(12))
    with pytest.raises(WindowTooSmall):
        small.row(x_element(1, 0), x_element(1, 0))
    with pytest.raises(KeyError):
        small.row(x_element(2, 0), x_element(0, 0))


def test_recursion_matches_direct_rows(table46):
    win = table46.window
    closure = recursion_closure(1, 1, win, table46)
    for (a, b, e), (i, j, f) in [((1, 0, 0), (1, 0, 0)), ((1, 1, 0), (1, 0, 1)), ((0, 1, 1), (1, 1, 0))]:
        x = win.by_params[("G012", "G012", a, b, e)]
        y = win.by_params[("G012", "G012", i, j, f)]
        assert closure[((a, b, e), (i, j, f))] == params_row(table46, x, y)


@pytest.mark.slow
def test_recursion_matches_tensor(table46):
    win = table46.window
    for k, l in ((1, 1), (2, 0), (0, 2)):
        closure = recursion_closure(k, l, win, table46)
        for ((a, b, e), (i, j, f)), row in closure.items():
            if a + b > 2 or i + j > 2:
                continue
            want = tensor(IrrClass(a, b, e), IrrClass(i, j, f))
            assert row == {(c.a, c.b, c.eps): m for c, m in want.terms.items()}


def test_associativity(table46):
    win = table46.window
    basis = [JElement.basis(p) for p in win.block("G012", "G012") if p.i + p.j <= 1]
    for a in basis:
        for b in basis:
            ab = t_multiply(a, b, win, table46)
            for c in basis:
                assert t_multiply(ab, c, win, table46) == t_multiply(a, t_multiply(b, c, win, table46), win, table46)


def test_symmetries_on_small_window(table30):
    pts = [p for p in table30.window.points if p.length <= 9]
    triples = [(x.element, y.element, z) for x in pts for y in pts for z in table30.row(x, y)]
    assert triples
    for rep in verify_gamma_symmetries(triples, table30):
        assert rep["violations"] == [], rep
        assert rep["sample-size"] > 0
    diag = [p for p in table30.window.block("G012", "G012") if p.i + p.j <= 1]
    assert verify_commutativity(diag, table30)["violations"] == []


def test_string_identities_sample(table30):
    pts = [p for p in table30.window.points if p.length <= 11]
    samples = string_samples(table30, pts)
    reps = verify_string_identities(samples, table30)
    for rep in reps:
        assert rep["violations"] == []
        assert rep["sample-size"] > 0
