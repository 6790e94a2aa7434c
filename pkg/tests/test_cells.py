import pytest
from hypothesis import given, settings, strategies as st

from cellring.cells import (
    BASE_INTERSECTIONS,
    LEFT_CELLS,
    STAR_EDGES,
    NotFound,
    NotInString,
    StarContext,
    a_lower_bound,
    base_element,
    cell_c_base_sets,
    commute_stars,
    distinguished_involution,
    left_star,
    right_star,
    star,
    string_through,
    verify_star_graph,
    verify_string_mu_identities,
    x_element,
)
from cellring.weyl import (
    IDENTITY,
    SIMPLE,
    TAU,
    evaluate,
    left_descents,
    length,
    reduced_word,
    right_descents,
)

W012 = evaluate("012012")
L23, L02 = StarContext((2, 3), "left"), StarContext((0, 2), "left")
R23, R02 = StarContext((2, 3), "right"), StarContext((0, 2), "right")


def test_string_examples():
    assert string_through(SIMPLE[2], L23) == ([SIMPLE[2], evaluate("32"), evaluate("232")], 1)
    assert string_through(SIMPLE[0], L02) == ([SIMPLE[0], evaluate("20")], 1)
    s, pos = string_through(x_element(0, 0), R23)
    assert pos == 1 and len(s) == 3


def test_star_examples():
    assert star(SIMPLE[2], L23) == evaluate("232")
    for i, j in ((0, 0), (1, 0), (0, 1)):
        x = x_element(i, j)
        assert left_star(x, (2, 3)) == evaluate("23") * x


def test_not_in_string():
    with pytest.raises(NotInString):
        star(IDENTITY, L23)
    with pytest.raises(NotInString):
        string_through(evaluate("2323"), L23)
    with pytest.raises(ValueError):
        StarContext((0, 1), "left")


def test_commute_stars_and_transport():
    from cellring.weyl import elements_up_to_length
    found = 0
    for x in elements_up_to_length(6):
        try:
            v = commute_stars(x, L02, R23)
        except NotInString:
            continue
        found += 1
        assert v == right_star(left_star(x, (0, 2)), (2, 3)) == left_star(right_star(x, (2, 3)), (0, 2))
    assert found > 0
    assert right_star(W012, (2, 3)) == evaluate("01201232")


def test_a_lower_bound():
    assert a_lower_bound(W012) == 6
    assert a_lower_bound(SIMPLE[1]) == 1
    # longest element of the parabolic subgroup on {0, 2, 3} (type C3, 9 positive roots)
    w023 = IDENTITY
    grown = True
    while grown:
        grown = False
        for s in (0, 2, 3):
            if length(w023 * SIMPLE[s]) > length(w023):
                w023, grown = w023 * SIMPLE[s], True
    assert length(w023) == 9
    assert a_lower_bound(w023) == 9
    from cellring.weyl import elements_up_to_length
    big = [y for y in elements_up_to_length(13)
           if {0, 2, 3} <= left_descents(y) and {0, 2, 3} <= right_descents(y)]
    assert w023 in big
    assert all(a_lower_bound(y) >= 9 for y in big)


def test_base_sets():
    pts = cell_c_base_sets(("G012", "G012"), 0)
    assert {p.element for p in pts} == {W012, TAU * W012}
    g02 = {p.element for p in cell_c_base_sets(("G02", "G02"), 0)}
    target = evaluate("023") * W012 * evaluate("320")
    assert target in g02 and length(target) == 12
    for which in BASE_INTERSECTIONS:
        for p in cell_c_base_sets(which, 1):
            assert right_descents(p.element) == LEFT_CELLS[p.left_cell].rset
            assert left_descents(p.element) == LEFT_CELLS[p.right_cell].rset
    with pytest.raises(KeyError):
        cell_c_base_sets(("G2", "G012"), 0)


def test_window_contains_representatives(window22):
    for label in LEFT_CELLS.values():
        rep = label.representative
        assert right_descents(rep) == label.rset
        assert rep in window22
        assert window22.lookup(rep).left_cell == label.name
    assert {length(c.representative) for c in LEFT_CELLS.values()} == set(range(6, 17))


def test_window_properties(window22):
    for p in window22.points:
        assert a_lower_bound(p.element) <= 6
        assert p.element.inverse() in window22
        q = window22.lookup(p.element.inverse())
        assert (q.left_cell, q.right_cell, q.params) == (p.right_cell, p.left_cell, p.params)
        # R-set constancy along left cells, L-set along right cells
        assert right_descents(p.element) == LEFT_CELLS[p.left_cell].rset
        assert left_descents(p.element) == LEFT_CELLS[p.right_cell].rset
        assert p.length <= 22


def test_window_parametrization(window22):
    x = window22.by_params[("G012", "G012", 1, 0, 0)]
    assert x.element == x_element(1, 0)
    assert window22.lookup(TAU * W012).params == (0, 0, 1)
    assert window22.lookup(x_element(0, 1)).params == (0, 1, 0)
    assert len(window22.block("G012", "G012")) == len({p.element for p in window22.block("G012", "G012")})


def test_star_graph():
    assert verify_star_graph() == []
    assert len(STAR_EDGES) == 20
    groups = {}
    for label in LEFT_CELLS.values():
        groups.setdefault(label.group, []).append(label.name)
    assert sorted(len(v) for v in groups.values()) == [3, 3, 3, 15]


def test_distinguished_involution_g012():
    assert distinguished_involution("G012", 12) == W012


def test_distinguished_involution_not_found():
    with pytest.raises(NotFound):
        distinguished_involution("G1", 12)


def test_string_mu_identities():
    rep = verify_string_mu_identities(10)
    assert rep["violations"] == []
    assert rep["inspected"] > 0


ctxs = st.sampled_from([StarContext(p, s) for p in ((0, 2), (1, 2), (2, 3)) for s in ("left", "right")])


@given(st.text(alphabet="0123t", max_size=12), ctxs)
@settings(max_examples=200)
def test_star_involution(word, ctx):
    x = evaluate(word)
    try:
        s, pos = string_through(x, ctx)
    except NotInString:
        return
    assert len(s) == ctx.order - 1
    assert s[pos - 1] == x
    assert star(star(x, ctx), ctx) == x


@given(st.text(alphabet="0123t", max_size=12), ctxs, ctxs)
@settings(max_examples=200)
def test_left_and_right_stars_commute(word, a, b):
    x = evaluate(word)
    left = StarContext(a.pair, "left")
    right = StarContext(b.pair, "right")
    try:
        v = commute_stars(x, left, right)
    except NotInString:
        return
    assert v == star(star(x, right), left)


def test_reduced_word_of_bases():
    assert reduced_word(base_element("G012", "G012", 0, 0, 0)) == "012012"
