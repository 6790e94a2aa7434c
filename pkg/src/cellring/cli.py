"""Command line front end: ``cellring kl | gamma | verify | export``.

Exit codes: 0 when every check passes, 1 on a mathematical violation,
2 on usage errors or a window that is too small.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import bijection, cells, hecke, jring, repring, weyl
from .jring import WindowTooSmall
from .laurent import LaurentPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    words: list[str] = field(default_factory=list)
    max_len: int | None = None
    max_ij: int = 1
    cache: str | None = None
    fmt: str = "text"
    threads: int = 1

    def __post_init__(self):
        if self.max_len is not None and self.max_len <= 0:
            raise ValueError("--max-len must be positive")
        if self.max_ij < 0:
            raise ValueError("--max-ij must be nonnegative")
        if self.threads < 1:
            raise ValueError("--threads must be positive")


# ---------------------------------------------------------------------------
# Suites: each returns a list of reports carrying a boolean "pass"


def _mark(report: dict) -> dict:
    bad = report.get("failures", report.get("violations", []))
    report["pass"] = not bad
    return report


def suite_coxeter(cfg: RunConfig) -> list[dict]:
    expected = {(0, 1): 2, (0, 3): 2, (1, 3): 2, (0, 2): 3, (1, 2): 3, (2, 3): 4}
    bad = []
    for (i, j), m in expected.items():
        got = weyl.coxeter_order(weyl.SIMPLE[i] * weyl.SIMPLE[j])
        if got != m:
            bad.append({"pair": [i, j], "expected": m, "got": got})
    t = weyl.TAU
    if t * t != weyl.IDENTITY or weyl.length(t) != 0:
        bad.append({"tau": "tau^2 = e and l(tau) = 0"})
    for i, j in ((0, 1), (1, 0), (2, 2), (3, 3)):
        if t * weyl.SIMPLE[i] * t != weyl.SIMPLE[j]:
            bad.append({"tau-conjugation": [i, j]})
    return [_mark({"identity": "coxeter", "sample-size": len(expected) + 5, "violations": bad})]


def suite_kl(cfg: RunConfig) -> list[dict]:
    bound = cfg.max_len or 10
    w012 = weyl.evaluate("012012")
    below = sorted(weyl.lower_interval(w012), key=weyl.reduced_word)
    bad = [weyl.reduced_word(y) for y in below if hecke.kl_polynomial(y, w012) != LaurentPoly.constant(1)]
    col = [_mark({"identity": "kl-w012-column", "sample-size": len(below), "violations": bad})]
    alg = hecke.default_algebra()
    u = alg.u
    u.extend(bound)
    viol, n = [], 0
    for w in range(len(u.elements)):
        if u.length[w] > bound:
            break
        lw = u.length[w]
        for y, p in alg.kl.column(w).items():
            if y == w:
                continue
            n += 1
            if 2 * (len(p) - 1) > lw - u.length[y] - 1:
                viol.append({"y": u.word(y), "w": u.word(w), "P": list(p)})
    if len(below) != 24:
        viol.append({"lower-interval": len(below)})
    col.append(_mark({"identity": "kl-degree-bound", "sample-size": n, "violations": viol}))
    return col


def eta() -> LaurentPoly:
    w012 = weyl.evaluate("012012")
    out = LaurentPoly()
    for u in weyl.lower_interval(w012):
        out = out + LaurentPoly.monomial(2 * weyl.length(u) - 6)
    return out


def suite_eta(cfg: RunConfig) -> list[dict]:
    w012 = weyl.evaluate("012012")
    prod = hecke.c_product(w012, w012)
    bad = []
    if prod != {w012: eta()}:
        bad.append({"got": {weyl.reduced_word(z): p.to_json() for z, p in prod.items()}})
    if eta().coeff(jring.A_VALUE) != 1:
        bad.append({"gamma": eta().coeff(jring.A_VALUE)})
    return [_mark({"identity": "eta", "sample-size": 1, "violations": bad})]


def _lemma_suite(cfg: RunConfig, which: str) -> list[dict]:
    win = cells.cell_c_enumerate(cfg.max_len or 30)
    table = jring.GammaTable(win)
    x = win.by_params[("G012", "G012", 1, 0, 0) if which == "x10" else ("G012", "G012", 0, 1, 0)]
    rule = jring.rule_x10 if which == "x10" else jring.rule_x01
    bad, n = [], 0
    for i in range(cfg.max_ij + 1):
        for j in range(cfg.max_ij + 1 - i):
            y = win.by_params[("G012", "G012", i, j, 0)]
            n += 1
            for route, row in (("hecke", table.row_hecke(x, y)), ("module", table.row(x, y))):
                got = {win.lookup(z).params[:2]: g for z, g in row.items()}
                if got != rule(i, j):
                    bad.append({"i": i, "j": j, "route": route, "expected": _keyed(rule(i, j)), "got": _keyed(got)})
    return [_mark({"identity": f"product-rule-{which}", "sample-size": n, "violations": bad})]


def _keyed(d: dict) -> dict:
    return {str(k): v for k, v in sorted(d.items())}


def suite_lemma35b(cfg: RunConfig) -> list[dict]:
    return _lemma_suite(cfg, "x10")


def suite_lemma35c(cfg: RunConfig) -> list[dict]:
    return _lemma_suite(cfg, "x01")


def suite_bernstein(cfg: RunConfig) -> list[dict]:
    win = cells.cell_c_enumerate(cfg.max_len or 22)
    w012 = weyl.evaluate("012012")
    bad = []
    s1, s2 = hecke.bernstein_S1(), hecke.bernstein_S2()
    for name, s in (("S1", s1), ("S2", s2)):
        for r in range(4):
            c = hecke.c_basis(weyl.SIMPLE[r])
            if s * c != c * s:
                bad.append({"element": name, "generator": r})
    xi = LaurentPoly({1: 1, -1: 1})
    tau = weyl.TAU
    x10 = cells.x_element(1, 0)
    x01 = cells.x_element(0, 1)
    cases = (
        ("S1", s1, {x10: LaurentPoly.constant(1), tau * w012: -xi}),
        ("S2", s2, {x01: LaurentPoly.constant(1), tau * x10: -xi, w012: LaurentPoly.constant(1)}),
    )
    for name, s, want in cases:
        got = hecke.to_c_basis(s * hecke.c_basis(w012))
        inside = {z: p for z, p in got.terms.items() if z in win}
        if inside != want:
            bad.append({"element": name, "got": {weyl.reduced_word(z): p.to_json() for z, p in inside.items()}})
    return [_mark({"identity": "bernstein", "sample-size": 10, "violations": bad})]


def suite_repring(cfg: RunConfig) -> list[dict]:
    bound = 4
    bad, n = [], 0
    irr = [repring.IrrClass(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    for x in irr:
        for y in irr:
            n += 1
            t = repring.tensor(x, y)
            if t != repring.tensor_by_characters(x, y):
                bad.append({"x": str(x), "y": str(y), "klimyk": t.to_json()})
            if t.dim() != repring.dim(x) * repring.dim(y):
                bad.append({"x": str(x), "y": str(y), "dim": t.dim()})
    for i in range(4):
        for j in range(4):
            v = repring.IrrClass(i, j)
            if repring.tensor(repring.IrrClass(1, 0), v) != repring.product_rule_lambda1(i, j):
                bad.append({"rule": "lambda1", "i": i, "j": j})
            if repring.tensor(repring.IrrClass(0, 1), v) != repring.product_rule_lambda2(i, j):
                bad.append({"rule": "lambda2", "i": i, "j": j})
    return [_mark({"identity": "representation-ring", "sample-size": n, "violations": bad})]


def suite_stars(cfg: RunConfig) -> list[dict]:
    graph = cells.verify_star_graph()
    return [
        _mark({"identity": "star-graph", "sample-size": len(cells.STAR_EDGES) * 2, "violations": graph}),
        _mark(cells.verify_string_mu_identities(cfg.max_len or 12)),
    ]


def symmetry_triples(table: jring.GammaTable, max_len: int = 12) -> list[tuple]:
    """All (x, y, z) with gamma != 0 among window points of length <= max_len."""
    pts = [p for p in table.window.points if p.length <= max_len]
    out = []
    for x in pts:
        for y in pts:
            if y.right_cell == x.left_cell:
                out.extend((x.element, y.element, z) for z in table.row(x, y))
    return out


def suite_symmetries(cfg: RunConfig) -> list[dict]:
    table = jring.GammaTable(cells.cell_c_enumerate(cfg.max_len or 30))
    win = table.window
    out = jring.verify_gamma_symmetries(symmetry_triples(table), table)
    strings = jring.string_samples(table, [p for p in win.points if p.length <= 14])
    out += jring.verify_string_identities(strings, table)
    diag = [p for p in win.points if p.left_cell == p.right_cell and p.length <= 16]
    by_cell: dict[str, list] = {}
    for p in diag:
        by_cell.setdefault(p.left_cell, []).append(p)
    comm = [jring.verify_commutativity(ps, table) for ps in by_cell.values()]
    out.append({
        "identity": "commutativity",
        "sample-size": sum(r["sample-size"] for r in comm),
        "violations": [v for r in comm for v in r["violations"]],
    })
    return [_mark(r) for r in out]


def _pi_table(cfg: RunConfig, default_len: int) -> jring.GammaTable:
    return jring.GammaTable(cells.cell_c_enumerate(cfg.max_len or default_len))


def suite_theorem34a(cfg: RunConfig) -> list[dict]:
    table = _pi_table(cfg, 46)
    out = [bijection.verify_isomorphism(table, bijection.diagonal_pairs(table.window, cfg.max_ij), cfg.threads)]
    out += bijection.verify_conjugation_identities(table, cfg.max_ij)
    return [_mark(r) for r in out]


def suite_theorem34b(cfg: RunConfig) -> list[dict]:
    table = _pi_table(cfg, 46)
    out = bijection.verify_transport_identities(table, cfg.max_ij)
    out.append(bijection.verify_isomorphism(table, bijection.cross_group_pairs(table.window), cfg.threads))
    return [_mark(r) for r in out]


def suite_theorem34(cfg: RunConfig) -> list[dict]:
    table = _pi_table(cfg, 30)
    win = table.window
    out = [
        bijection.verify_round_trip(win),
        bijection.verify_duality(win),
        bijection.verify_path_independence(win),
        bijection.verify_isomorphism(table, bijection.diagonal_pairs(win, cfg.max_ij), cfg.threads),
    ]
    return [_mark(r) for r in out]


SUITES = {
    "coxeter": suite_coxeter,
    "kl": suite_kl,
    "eta": suite_eta,
    "lemma35b": suite_lemma35b,
    "lemma35c": suite_lemma35c,
    "bernstein": suite_bernstein,
    "repring": suite_repring,
    "stars": suite_stars,
    "symmetries": suite_symmetries,
    "theorem34": suite_theorem34,
    "theorem34a": suite_theorem34a,
    "theorem34b": suite_theorem34b,
}


# ---------------------------------------------------------------------------
# Commands


def cmd_kl(cfg: RunConfig, out) -> int:
    y, w = (weyl.evaluate(s) for s in cfg.words)
    p = hecke.kl_polynomial(y, w)
    if cfg.fmt == "json":
        json.dump({"y": cfg.words[0], "w": cfg.words[1], "P": p.to_json()}, out)
        out.write("\n")
    else:
        out.write(p.format("q") + "\n")
    return EXIT_OK


def cmd_gamma(cfg: RunConfig, out) -> int:
    x, y = (weyl.evaluate(s) for s in cfg.words)
    bound = cfg.max_len or max(22, weyl.length(x) + weyl.length(y))
    table = jring.GammaTable(cells.cell_c_enumerate(bound))
    row = table.row(x, y)
    rows = sorted(((weyl.reduced_word(z), g) for z, g in row.items()), key=lambda r: (len(r[0]), r[0]))
    xs, ys = weyl.reduced_word(x), weyl.reduced_word(y)
    if cfg.fmt == "json":
        json.dump({"x": xs, "y": ys, "rows": [{"z": z, "gamma": g} for z, g in rows]}, out)
        out.write("\n")
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["x", "y", "z", "gamma"])
        for z, g in rows:
            w.writerow([xs, ys, z, g])
    else:
        for z, g in rows:
            p = table.window.lookup(weyl.evaluate(z))
            out.write(f"{z}\t{g}\t{p.left_cell},{p.right_cell},{p.i},{p.j},{p.eps}\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    name = cfg.words[0]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    reports = SUITES[name](cfg)
    ok = all(r["pass"] for r in reports)
    if cfg.fmt == "text":
        for r in reports:
            label = r.get("identity", r.get("check"))
            size = r.get("sample-size", r.get("pairs_tested"))
            out.write(f"{'PASS' if r['pass'] else 'FAIL'}  {label}  ({size})\n")
    else:
        json.dump({"suite": name, "pass": ok, "reports": reports}, out, indent=1)
        out.write("\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export(cfg: RunConfig, out) -> int:
    what = cfg.words[0]
    win = cells.cell_c_enumerate(cfg.max_len or 22)
    if what == "dictionary":
        out.write(bijection.export_csv(win))
    elif what == "gamma":
        table = jring.GammaTable(win)
        pts = [p for p in win.block("G012", "G012") if p.i + p.j <= cfg.max_ij]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "y", "z", "gamma"])
        for x in pts:
            for y in pts:
                for z, g in sorted(table.row(x, y).items(), key=lambda kv: weyl.reduced_word(kv[0])):
                    w.writerow([weyl.reduced_word(x.element), weyl.reduced_word(y.element), weyl.reduced_word(z), g])
        out.write(buf.getvalue())
    else:
        raise KeyError(f"unknown export {what!r}; choose dictionary or gamma")
    return EXIT_OK


COMMANDS = {"kl": (cmd_kl, 2), "gamma": (cmd_gamma, 2), "verify": (cmd_verify, 1), "export": (cmd_export, 1)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cellring", description="Exact computations in the a=6 cell of the affine Weyl group of type B3~.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("words", nargs="*", help="words over 0,1,2,3,t; or a suite / export name")
    p.add_argument("--max-len", type=int, default=None, help="length bound of the enumerated window")
    p.add_argument("--max-ij", type=int, default=1, help="bound on i+j for parametrized samples")
    p.add_argument("--cache", default=None, help="KL cache file (JSON lines)")
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--threads", type=int, default=1)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = RunConfig(ns.command, ns.words, ns.max_len, ns.max_ij, ns.cache, ns.fmt, ns.threads)
        func, nargs = COMMANDS[cfg.command]
        if len(cfg.words) != nargs:
            raise ValueError(f"{cfg.command} takes {nargs} argument(s)")
        cache = os.environ.get("CELLRING_CACHE") or cfg.cache
        if cache:
            hecke.use_cache(cache)
        return func(cfg, out)
    except (ValueError, KeyError, WindowTooSmall, cells.OutsideWindow) as e:
        print(f"cellring: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        hecke.use_cache(None)


if __name__ == "__main__":
    sys.exit(main())
