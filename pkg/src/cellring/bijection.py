"""The bijection pi from the cell c onto irreducible entries of the 24 x 24
matrix ring over Rep(Sp4 x Z/2), and its verifiers.

An element x in Γ ∩ Θ^{-1} with pulled-back parameters (i, j, eps) goes to
eps^e V(i lam1 + j lam2) at position (row Θ, col Γ).  With this convention
pi(t_x t_y) = pi(x) pi(y) is ordinary matrix multiplication.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .cells import (
    LEFT_CELLS,
    STAR_PATHS,
    CellPoint,
    CellWindow,
    base_element,
    cell_c_enumerate,
    distinguished_involution,
    left_star,
    right_star,
    root_of,
    transport,
    x_element,
)
from .jring import GammaTable, JElement, WindowTooSmall
from .repring import IrrClass, VirtualRep
from .weyl import SIMPLE, WeylElement, reduced_word, split_tau

R0, R1, R2, R3 = SIMPLE
STAR = (2, 3)


@dataclass(frozen=True)
class MatrixRep:
    """A single entry of the matrix ring: entry at (row, col)."""

    row: str
    col: str
    entry: VirtualRep

    def __str__(self) -> str:
        return f"{self.entry!r} @ ({self.row},{self.col})"


class Matrix:
    """Sparse matrix over the representation ring, keyed by (row, col)."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[tuple[str, str], VirtualRep] | None = None):
        self.entries = {k: v for k, v in (entries or {}).items() if v.terms}

    @classmethod
    def of(cls, m: MatrixRep) -> "Matrix":
        return cls({(m.row, m.col): m.entry})

    def __add__(self, other: "Matrix") -> "Matrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return Matrix(out)

    def scale(self, k: int) -> "Matrix":
        return Matrix({p: v.scale(k) for p, v in self.entries.items()})

    def __mul__(self, other: "Matrix") -> "Matrix":
        out: dict[tuple[str, str], VirtualRep] = {}
        for (a, b), u in self.entries.items():
            for (c, d), w in other.entries.items():
                if b == c:
                    prod = u * w
                    out[(a, d)] = out[(a, d)] + prod if (a, d) in out else prod
        return Matrix(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def to_json(self) -> dict[str, dict[str, int]]:
        return {f"{r},{c}": v.to_json() for (r, c), v in sorted(self.entries.items())}

    def __repr__(self) -> str:
        return f"Matrix({self.to_json()})"


# ---------------------------------------------------------------------------
# pi and its inverse


def pull_back(x: WeylElement, left: str, right: str) -> WeylElement:
    """Undo the canonical star path of Γ_left ∩ Γ_right^{-1}."""
    for pair in reversed(STAR_PATHS[right]):
        x = left_star(x, pair)
    for pair in reversed(STAR_PATHS[left]):
        x = right_star(x, pair)
    return x


def _params_of(p: CellPoint) -> tuple[int, int, int]:
    base = pull_back(p.element, p.left_cell, p.right_cell)
    want = base_element(root_of(p.left_cell), root_of(p.right_cell), *p.params)
    if base != want:
        raise AssertionError(f"pull-back of {reduced_word(p.element)} misses its base point")
    if split_tau(base)[0] != split_tau(p.element)[0]:
        raise AssertionError(f"tau coset changed along the star path of {reduced_word(p.element)}")
    return p.params


def _point(x, window: CellWindow | None) -> CellPoint:
    if isinstance(x, CellPoint):
        return x
    if window is None:
        raise TypeError("a window is needed to locate a bare group element")
    return window.lookup(x)


def pi(x, window: CellWindow | None = None) -> MatrixRep:
    """pi(x) for a CellPoint (or an element of the window)."""
    p = _point(x, window)
    i, j, e = _params_of(p)
    return MatrixRep(p.right_cell, p.left_cell, VirtualRep.irr(IrrClass(i, j, e)))


def pi_inverse(m: MatrixRep, window: CellWindow | None = None) -> CellPoint:
    if not m.entry.is_irreducible():
        raise ValueError(f"entry {m.entry!r} is not a single irreducible")
    c = next(iter(m.entry.terms))
    left, right = m.col, m.row
    if window is not None:
        p = window.by_params.get((left, right, c.a, c.b, c.eps))
        if p is None:
            raise WindowTooSmall(f"{c} at ({m.row},{m.col}) lies outside the window")
        return p
    base = base_element(root_of(left), root_of(right), c.a, c.b, c.eps)
    return CellPoint(transport(base, left, right), left, right, c.a, c.b, c.eps)


def pi_matrix(x, window: CellWindow | None = None) -> Matrix:
    return Matrix.of(pi(x, window))


def pi_of(a: JElement) -> Matrix:
    out = Matrix()
    for p, c in a.terms.items():
        out = out + Matrix.of(pi(p)).scale(c)
    return out


# ---------------------------------------------------------------------------
# Reports


def _report(check: str, window: int, n: int, failures: list) -> dict:
    return {"check": check, "window": window, "pairs_tested": n, "failures": failures}


def verify_isomorphism(table: GammaTable, pairs: Iterable[tuple], threads: int = 1) -> dict:
    """pi(t_x t_y) = pi(x) pi(y) on the given pairs of CellPoints."""
    win = table.window
    pairs = [(_point(x, win), _point(y, win)) for x, y in pairs]
    rows = table.rows_parallel([(x.element, y.element) for x, y in pairs], threads)
    failures = []
    for (x, y), row in zip(pairs, rows):
        got = Matrix()
        for z, g in row.items():
            got = got + pi_matrix(win.lookup(z)).scale(g)
        expected = pi_matrix(x) * pi_matrix(y)
        if got != expected:
            failures.append(
                {
                    "x": reduced_word(x.element),
                    "y": reduced_word(y.element),
                    "expected": expected.to_json(),
                    "got": got.to_json(),
                }
            )
    return _report("isomorphism", win.max_len, len(pairs), failures)


def verify_duality(window: CellWindow) -> dict:
    """pi(x^{-1}) is pi(x) moved to the transposed position with dual entry."""
    failures, n = [], 0
    for p in window.points:
        q = window.by_element.get(p.element.inverse())
        if q is None:
            continue
        n += 1
        a, b = pi(p), pi(q)
        if (b.row, b.col) != (a.col, a.row) or b.entry != a.entry.dual():
            failures.append({"x": reduced_word(p.element), "y": reduced_word(q.element), "expected": str(a), "got": str(b)})
    return _report("duality", window.max_len, n, failures)


def verify_round_trip(window: CellWindow) -> dict:
    failures = []
    for p in window.points:
        q = pi_inverse(pi(p), window)
        if q.element != p.element:
            failures.append({"x": reduced_word(p.element), "got": reduced_word(q.element)})
    return _report("round-trip", window.max_len, len(window.points), failures)


def verify_path_independence(window: CellWindow) -> dict:
    """Left and right halves of a star path commute.

    The star graphs are trees, so each block has one canonical path; what can
    differ is the interleaving of its left and right steps.  Applying all
    right stars first, all left stars first, or alternating them must give
    the same element.
    """
    failures, n = [], 0
    for p in window.points:
        base = base_element(root_of(p.left_cell), root_of(p.right_cell), *p.params)
        rs, ls = STAR_PATHS[p.left_cell], STAR_PATHS[p.right_cell]
        a = base
        for pair in ls:
            a = left_star(a, pair)
        for pair in rs:
            a = right_star(a, pair)
        b = base
        for k in range(max(len(rs), len(ls))):
            if k < len(rs):
                b = right_star(b, rs[k])
            if k < len(ls):
                b = left_star(b, ls[k])
        n += 1
        if not (a == b == p.element):
            failures.append({"x": reduced_word(p.element), "left-first": reduced_word(a), "interleaved": reduced_word(b)})
    return _report("path-independence", window.max_len, n, failures)


def distinguished_involutions(window: CellWindow, engine=None) -> dict[str, WeylElement]:
    return {name: distinguished_involution(name, window.max_len, engine) for name in LEFT_CELLS}


def verify_unit(table: GammaTable, involutions: Mapping[str, WeylElement], max_ij: int = 1) -> dict:
    """pi(sum_d t_d) is the identity matrix, and t_d t_x = t_x = t_x t_d."""
    win = table.window
    failures, n = [], 0
    unit = Matrix()
    for name, d in involutions.items():
        unit = unit + pi_matrix(win.lookup(d))
    ident = Matrix({(name, name): VirtualRep.irr(IrrClass(0, 0)) for name in LEFT_CELLS})
    if unit != ident:
        failures.append({"x": "sum of t_d", "y": "", "expected": ident.to_json(), "got": unit.to_json()})
    for p in win.points:
        if p.i + p.j > max_ij:
            continue
        for d, side in ((involutions[p.left_cell], "right"), (involutions[p.right_cell], "left")):
            try:
                row = table.row(d, p.element) if side == "left" else table.row(p.element, d)
            except WindowTooSmall:
                continue
            n += 1
            if row != {p.element: 1}:
                failures.append({"x": reduced_word(d), "y": reduced_word(p.element), "expected": {reduced_word(p.element): 1},
                                 "got": {reduced_word(z): g for z, g in row.items()}})
    return _report("unit", win.max_len, n, failures)


# ---------------------------------------------------------------------------
# Structural identities behind the base bijections


def _lstar(x):
    return left_star(x, STAR)


def _rstar(x):
    return right_star(x, STAR)


def _bar(x):
    """*x* for the pair {r2, r3} on both sides."""
    return _rstar(_lstar(x))


def _hat(x):
    return R0 * _bar(x) * R0


def _params(max_ij: int, eps: Iterable[int]) -> list[tuple[int, int, int]]:
    return [(i, j, e) for i in range(max_ij + 1) for j in range(max_ij + 1 - i) for e in eps]


def _row_identity(name, table, grid, lhs: Callable, rhs: Callable, zmap: Callable) -> dict:
    """row(lhs(a, b)) equals zmap applied to row(rhs(a, b)), support included."""
    failures, n = [], 0
    for a in grid:
        for b in grid:
            x, y = lhs(a, b)
            u, v = rhs(a, b)
            got = table.row(x, y)
            expected = {zmap(z): g for z, g in table.row(u, v).items()}
            n += 1
            if got != expected:
                failures.append(
                    {
                        "x": reduced_word(x),
                        "y": reduced_word(y),
                        "expected": {reduced_word(z): g for z, g in expected.items()},
                        "got": {reduced_word(z): g for z, g in got.items()},
                    }
                )
    return _report(name, table.window.max_len, n, failures)


def _triple_identity(name, table, grid, lhs: Callable, rhs: Callable) -> dict:
    """gamma(lhs(a, b, c)) = gamma(rhs(a, b, c)) over the grid cubed."""
    failures, n = [], 0
    for a in grid:
        for b in grid:
            for c in grid:
                t1, t2 = lhs(a, b, c), rhs(a, b, c)
                g1, g2 = table.gamma(*t1), table.gamma(*t2)
                n += 1
                if g1 != g2:
                    failures.append({"x": [reduced_word(e) for e in t1], "y": [reduced_word(e) for e in t2],
                                     "expected": g2, "got": g1})
    return _report(name, table.window.max_len, n, failures)


def verify_conjugation_identities(table: GammaTable, max_ij: int = 1, eps: Iterable[int] = (0, 1)) -> list[dict]:
    """Conjugation invariance of gamma on the diagonal blocks of Γ02, Γ03, Γ'013."""
    grid = _params(max_ij, tuple(eps))
    x = lambda p: x_element(*p)  # noqa: E731
    xb = lambda p: _bar(x_element(*p))  # noqa: E731
    xh = lambda p: base_element("G02", "G02", *p)  # noqa: E731
    xt = lambda p: base_element("G03", "G03", *p)  # noqa: E731
    out = [
        _row_identity("double-star", table, grid, lambda a, b: (xb(a), xb(b)), lambda a, b: (x(a), x(b)), _bar),
        _row_identity("r0-conjugation", table, grid, lambda a, b: (xh(a), xh(b)), lambda a, b: (x(a), x(b)), _hat),
    ]
    for s, name, inner in ((R3, "r3", xh), (R1, "r1", xt)):
        conj = lambda z, s=s: s * z * s  # noqa: E731
        out.append(
            _row_identity(f"{name}-one-sided", table, grid,
                          lambda a, b, s=s, inner=inner: (s * inner(a), inner(b) * s),
                          lambda a, b, inner=inner: (inner(a), inner(b)), conj)
        )
        zfix = (lambda z: z.inverse()) if s is R1 else (lambda z: z)
        out.append(
            _triple_identity(f"{name}-rotation", table, grid,
                             lambda a, b, c, s=s, inner=inner: (inner(b) * s, s * inner(c) * s, inner(a) * s),
                             lambda a, b, c, s=s, inner=inner, zfix=zfix: (s * inner(a), inner(b) * s, s * zfix(inner(c)) * s))
        )
        out.append(
            _triple_identity(f"{name}-two-sided", table, grid,
                             lambda a, b, c, s=s, inner=inner: (s * inner(b) * s, s * inner(c) * s, s * inner(a) * s),
                             lambda a, b, c, s=s, inner=inner: (inner(b) * s, s * inner(c) * s, inner(a) * s))
        )
        out.append(
            _row_identity(f"{name}-conjugation", table, grid,
                          lambda a, b, s=s, inner=inner: (s * inner(a) * s, s * inner(b) * s),
                          lambda a, b, inner=inner: (inner(a), inner(b)), conj)
        )
    return out


def verify_transport_identities(table: GammaTable, max_ij: int = 1, eps: Iterable[int] = (0, 1)) -> list[dict]:
    """Products between different base intersections reduce to the Γ012 table."""
    grid = _params(max_ij, tuple(eps))
    x = lambda p: x_element(*p)  # noqa: E731
    ls = lambda p: R0 * _lstar(x(p))  # r0(*x)  # noqa: E731
    rs = lambda p: _rstar(x(p)) * R0  # (x*)r0  # noqa: E731
    same = lambda a, b: (x(a), x(b))  # noqa: E731
    out = [
        _row_identity("r0-left-star", table, grid, lambda a, b: (ls(a), x(b)), same, lambda z: R0 * _lstar(z)),
        _row_identity("r0-both-stars", table, grid, lambda a, b: (ls(a), rs(b)), same, _hat),
        _row_identity("r0-both-stars-r3", table, grid, lambda a, b: (ls(a), rs(b) * R3), same, lambda z: _hat(z) * R3),
        _row_identity("r0-both-stars-r3r1", table, grid, lambda a, b: (ls(a), rs(b) * R3 * R1), same,
                      lambda z: _hat(z) * R3 * R1),
        _row_identity("star-r0-swap", table, grid, lambda a, b: (rs(a), ls(b)), same, lambda z: z),
        _row_identity("r0-conjugate-left", table, grid, lambda a, b: (_hat(x(a)), ls(b)), same, lambda z: R0 * _lstar(z)),
        _row_identity("r3-r0-conjugate-left", table, grid, lambda a, b: (R3 * _hat(x(a)), ls(b)), same,
                      lambda z: R3 * R0 * _lstar(z)),
        _row_identity("r1-r3-r0-conjugate-left", table, grid, lambda a, b: (R1 * R3 * _hat(x(a)), ls(b)), same,
                      lambda z: R1 * R3 * R0 * _lstar(z)),
    ]
    # left shifts by r3 / r1 against every root block on the right
    shifts = (
        ("r3-shift-G012-G02", R3, "G012", "G02"),
        ("r1-shift-G012-G03", R1, "G012", "G03"),
        ("r3-shift-G02-G02", R3, "G02", "G02"),
        ("r1-shift-G02-G03", R1, "G02", "G03"),
        ("r1-shift-G03-G03", R1, "G03", "G03"),
    )
    roots = ("G012", "G02", "G03", "G013p")
    for name, s, left, right in shifts:
        failures, n = [], 0
        for a in grid:
            xe = base_element(left, right, *a)
            for phi in roots:
                for b in grid:
                    y = base_element(phi, left, *b)
                    got = table.row(s * xe, y)
                    expected = {s * z: g for z, g in table.row(xe, y).items()}
                    n += 1
                    if got != expected:
                        failures.append({
                            "x": reduced_word(s * xe), "y": reduced_word(y),
                            "expected": {reduced_word(z): g for z, g in expected.items()},
                            "got": {reduced_word(z): g for z, g in got.items()},
                        })
        out.append(_report(name, table.window.max_len, n, failures))
    return out


# ---------------------------------------------------------------------------
# Samples and export


def diagonal_pairs(window: CellWindow, max_ij: int = 1, cell: str = "G012") -> list[tuple[CellPoint, CellPoint]]:
    pts = [p for p in window.block(cell, cell) if p.i + p.j <= max_ij]
    return [(a, b) for a in pts for b in pts]


# one small cell per Y-group besides the roots
CROSS_CELLS = ("G012", "G03", "G013p", "G02", "G2", "G23", "G2p", "G12")


def cross_group_pairs(window: CellWindow, cells: Iterable[str] = CROSS_CELLS,
                      params: Iterable[tuple[int, int, int]] = ((0, 0, 0), (0, 0, 1), (1, 0, 0))) -> list[tuple[CellPoint, CellPoint]]:
    """Composable pairs x ∈ Γ∩Θ^{-1}, y ∈ Φ∩Γ^{-1} whose cells span several Y-groups."""
    cells, params = tuple(cells), tuple(params)
    out = []
    for theta in cells:
        for gam in cells:
            for phi in cells:
                groups = {LEFT_CELLS[c].group for c in (theta, gam, phi)}
                if len(groups) < 2:
                    continue
                for a in params:
                    b = params[0] if a != params[0] else params[-1]
                    x = window.by_params.get((gam, theta, *a))
                    y = window.by_params.get((phi, gam, *b))
                    if x is not None and y is not None:
                        out.append((x, y))
    return out


def export_csv(window: CellWindow) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["word", "left_cell", "right_cell", "i", "j", "eps", "irr"])
    for p in window.points:
        c = IrrClass(p.i, p.j, p.eps)
        w.writerow([reduced_word(p.element), p.left_cell, p.right_cell, p.i, p.j, p.eps, str(c)])
    return buf.getvalue()


__all__ = [
    "Matrix",
    "MatrixRep",
    "cross_group_pairs",
    "diagonal_pairs",
    "distinguished_involutions",
    "export_csv",
    "pi",
    "pi_inverse",
    "pi_matrix",
    "pi_of",
    "pull_back",
    "verify_conjugation_identities",
    "verify_duality",
    "verify_isomorphism",
    "verify_path_independence",
    "verify_round_trip",
    "verify_transport_identities",
    "verify_unit",
]
