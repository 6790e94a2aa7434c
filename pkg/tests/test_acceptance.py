"""The acceptance suite: every criterion at exact, zero-tolerance arithmetic.

Each test prints one PASS/FAIL line; the same lines are repeated in the
pytest terminal summary.
"""

import time

from cellring import bijection, cells, hecke, jring, repring, weyl
from cellring.cli import RunConfig, suite_bernstein, suite_kl, suite_stars, suite_symmetries
from cellring.laurent import LaurentPoly

W012 = weyl.evaluate("012012")


def _failures(reports):
    return [r for r in reports if r.get("violations", r.get("failures"))]


def _sizes(reports):
    return ", ".join(
        f"{r.get('identity', r.get('check'))}={r.get('sample-size', r.get('pairs_tested'))}" for r in reports
    )


def test_coxeter_presentation(criterion):
    with criterion(1, "Coxeter presentation and tau relations") as c:
        t0 = time.perf_counter()
        expected = {(0, 1): 2, (0, 3): 2, (1, 3): 2, (0, 2): 3, (1, 2): 3, (2, 3): 4}
        got = {k: weyl.coxeter_order(weyl.SIMPLE[k[0]] * weyl.SIMPLE[k[1]]) for k in expected}
        tau = weyl.TAU
        tau_ok = (
            tau * tau == weyl.IDENTITY
            and weyl.length(tau) == 0
            and not tau.in_affine_subgroup()
            and all(tau * weyl.SIMPLE[i] * tau == weyl.SIMPLE[j] for i, j in ((0, 1), (1, 0), (2, 2), (3, 3)))
            and all(s * s == weyl.IDENTITY for s in weyl.SIMPLE)
        )
        elapsed = time.perf_counter() - t0
        c.ok = got == expected and tau_ok and elapsed < 1
        c.detail = f"orders {got == expected}, tau {tau_ok}, {elapsed:.3f}s"
    assert c.ok


def test_kl_sanity(criterion):
    with criterion(2, "KL column of w012 and degree bound for l(w) <= 10") as c:
        t0 = time.perf_counter()
        below = weyl.lower_interval(W012)
        column = len(below) == 24 and all(hecke.kl_polynomial(y, W012) == LaurentPoly.constant(1) for y in below)
        reports = suite_kl(RunConfig("verify", ["kl"], max_len=10))
        elapsed = time.perf_counter() - t0
        c.ok = column and not _failures(reports) and elapsed < 60
        c.detail = f"column {column}, {_sizes(reports)}, {elapsed:.1f}s"
    assert c.ok


def test_eta_identity(criterion):
    with criterion(3, "C_w012 C_w012 = eta C_w012 and gamma = 1") as c:
        t0 = time.perf_counter()
        eta = LaurentPoly()
        for u in weyl.lower_interval(W012):
            eta = eta + LaurentPoly.monomial(2 * weyl.length(u) - 6)
        prod = hecke.c_product(W012, W012)
        g = jring.gamma(W012, W012, W012)
        g_hecke = jring.gamma(W012, W012, W012, method="hecke")
        elapsed = time.perf_counter() - t0
        c.ok = prod == {W012: eta} and g == g_hecke == 1 and elapsed < 60
        c.detail = f"eta={eta}, gamma={g}/{g_hecke}, {elapsed:.1f}s"
    assert c.ok


def _product_rule(which, params, limit):
    t0 = time.perf_counter()
    table = jring.GammaTable(cells.cell_c_enumerate(30))
    win = table.window
    key = (1, 0, 0) if which == "x10" else (0, 1, 0)
    rule = jring.rule_x10 if which == "x10" else jring.rule_x01
    x = win.by_params[("G012", "G012", *key)]
    bad = []
    for i, j in params:
        y = win.by_params[("G012", "G012", i, j, 0)]
        for route, row in (("hecke", table.row_hecke(x, y)), ("module", table.row(x, y))):
            got = {win.lookup(z).params[:2]: g for z, g in row.items()}
            if got != rule(i, j):
                bad.append((route, i, j, got))
    elapsed = time.perf_counter() - t0
    return not bad and elapsed < limit, f"{len(params)} rows x 2 routes, failures {bad}, {elapsed:.1f}s"


def test_product_rule_x10(criterion):
    with criterion(4, "four-term rule for t_x10 t_xij, i+j <= 1, from Hecke products") as c:
        c.ok, c.detail = _product_rule("x10", [(0, 0), (1, 0), (0, 1)], 600)
    assert c.ok


def test_product_rule_x01(criterion):
    with criterion(5, "five-term rule for t_x01 t_xij with the (1 - delta_0i) term") as c:
        c.ok, c.detail = _product_rule("x01", [(0, 0), (1, 0), (0, 1)], 900)
    assert c.ok


def test_bernstein_elements(criterion):
    with criterion(6, "Bernstein elements central; S C_w012 on the c window") as c:
        t0 = time.perf_counter()
        reports = suite_bernstein(RunConfig("verify", ["bernstein"], max_len=30))
        elapsed = time.perf_counter() - t0
        c.ok = not _failures(reports) and elapsed < 300
        c.detail = f"{_sizes(reports)}, {elapsed:.1f}s"
    assert c.ok


def test_representation_oracle(criterion):
    with criterion(7, "Klimyk = character oracle (625 pairs), dimensions, product rules") as c:
        t0 = time.perf_counter()
        irr = [repring.IrrClass(a, b) for a in range(5) for b in range(5)]
        bad = 0
        for x in irr:
            for y in irr:
                t = repring.tensor(x, y)
                bad += t != repring.tensor_by_characters(x, y)
                bad += t.dim() != repring.dim(x) * repring.dim(y)
        for i in range(4):
            for j in range(4):
                v = repring.IrrClass(i, j)
                bad += repring.tensor(repring.IrrClass(1, 0), v) != repring.product_rule_lambda1(i, j)
                bad += repring.tensor(repring.IrrClass(0, 1), v) != repring.product_rule_lambda2(i, j)
        elapsed = time.perf_counter() - t0
        c.ok = bad == 0 and elapsed < 10
        c.detail = f"{len(irr) ** 2} pairs, {bad} mismatches, {elapsed:.1f}s"
    assert c.ok


def test_diagonal_blocks(criterion, table46):
    with criterion(8, "diagonal block isomorphism with eps-twists; conjugation identities") as c:
        t0 = time.perf_counter()
        pairs = bijection.diagonal_pairs(table46.window, 1)
        reports = [bijection.verify_isomorphism(table46, pairs)]
        reports += bijection.verify_conjugation_identities(table46, 1, eps=(0, 1))
        elapsed = time.perf_counter() - t0
        twisted = sum(1 for x, y in pairs if x.eps or y.eps)
        c.ok = not _failures(reports) and twisted > 0 and elapsed < 1800
        c.detail = f"{_sizes(reports)}, {elapsed:.1f}s"
    assert c.ok


def test_bimodule_blocks(criterion, table46):
    with criterion(9, "transport identities and cross-group matrix composition") as c:
        t0 = time.perf_counter()
        reports = bijection.verify_transport_identities(table46, 1, eps=(0, 1))
        pairs = bijection.cross_group_pairs(table46.window)
        reports.append(bijection.verify_isomorphism(table46, pairs))
        elapsed = time.perf_counter() - t0
        c.ok = not _failures(reports) and all(r["pairs_tested"] for r in reports) and elapsed < 1800
        c.detail = f"{_sizes(reports)}, {elapsed:.1f}s"
    assert c.ok


def test_star_identity_suite(criterion):
    with criterion(10, "string mu-identities, gamma symmetries, string identities") as c:
        t0 = time.perf_counter()
        reports = suite_stars(RunConfig("verify", ["stars"], max_len=12))
        reports += suite_symmetries(RunConfig("verify", ["symmetries"], max_len=30))
        elapsed = time.perf_counter() - t0
        nonempty = all(r.get("sample-size", 1) > 0 for r in reports)
        c.ok = not _failures(reports) and nonempty and elapsed < 600
        c.detail = f"{_sizes(reports)}, {elapsed:.1f}s"
    assert c.ok


def test_distinguished_involutions(criterion, table30):
    with criterion(11, "one distinguished involution per left cell; unit law") as c:
        t0 = time.perf_counter()
        ds = bijection.distinguished_involutions(table30.window)
        shape = len(ds) == 24 and all(
            d == d.inverse() and weyl.length(d) - 6 - 2 * hecke.delta(d) == 0 for d in ds.values()
        )
        unit = bijection.verify_unit(table30, ds, max_ij=1)
        elapsed = time.perf_counter() - t0
        c.ok = shape and not unit["failures"] and unit["pairs_tested"] > 0
        c.detail = f"{len(ds)} involutions, unit checks {unit['pairs_tested']}, {elapsed:.1f}s"
    assert c.ok
