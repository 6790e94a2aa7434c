"""The based ring J_c: gamma constants, truncated products, and the
structural identities they satisfy.

gamma_{x,y,z} is the coefficient of v^6 in h_{x,y,z} (a = 6 on c).  Two
routes compute it:

* ``hecke``: expand C_x C_y with ``hecke.c_product`` and read the C_z
  coefficient.  Exact, but the T-basis product grows quickly with length.
* ``module``: act with T~_x = T~_{s1} ... T~_{sk} on C_y inside the left cell
  module spanned by the C_w, w in the left cell of y.  Since every z in c with
  h_{x,y,z} != 0 lies in that left cell, the C_z coefficients at z in c agree
  with the full product.  Lower-order terms are dropped as soon as they can
  no longer reach degree 6.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Mapping

from .cells import (
    CellPoint,
    CellWindow,
    NotInString,
    StarContext,
    cell_c_enumerate,
    star,
)
from .hecke import HeckeAlgebra, c_product, default_algebra
from .laurent import ZERO as _ZERO
from .weyl import SIMPLE, TAU, WeylElement, length, reduced_word, split_tau

A_VALUE = 6


class WindowTooSmall(RuntimeError):
    """A product term would leave the enumerated window."""


class DegreeBoundViolation(ArithmeticError):
    """Some h_{x,y,z} with z in c has v-degree above a(z) = 6."""


def _elem(x) -> WeylElement:
    return x.element if isinstance(x, CellPoint) else x


class GammaTable:
    """Memoized gamma rows over a fixed window of c."""

    def __init__(self, window: CellWindow | int, algebra: HeckeAlgebra | None = None):
        self.window = cell_c_enumerate(window) if isinstance(window, int) else window
        self.alg = algebra if algebra is not None else default_algebra()
        self.rows: dict[tuple[WeylElement, WeylElement], dict[WeylElement, int]] = {}
        self.max_reached = 0
        self._member: dict[str, dict[int, bool]] = {}
        self._lock = threading.RLock()

    # membership of universe ids in a left cell
    def _in_cell(self, cell: str, i: int) -> bool:
        memo = self._member.setdefault(cell, {})
        hit = memo.get(i)
        if hit is None:
            u = self.alg.u
            if u.length[i] > self.window.max_len:
                raise WindowTooSmall(
                    f"term of length {u.length[i]} exceeds window {self.window.max_len}"
                )
            p = self.window.by_element.get(u.elements[i])
            hit = memo[i] = p is not None and p.left_cell == cell
        return hit

    def row(self, x, y) -> dict[WeylElement, int]:
        """All nonzero gamma_{x,y,z} with z in c, by the module route."""
        x, y = _elem(x), _elem(y)
        key = (x, y)
        out = self.rows.get(key)
        if out is not None:
            return out
        self.window.lookup(x)
        cell = self.window.lookup(y).left_cell
        with self._lock:
            out = self._module_row(x, y, cell)
            self.rows[key] = out
        return out

    def _module_row(self, x: WeylElement, y: WeylElement, cell: str) -> dict[WeylElement, int]:
        # C_{tau^a x'} C_{tau^b y'} = T_tau^{a+b} C_{sigma^b(x')} C_{y'}
        a, x0 = split_tau(x)
        b, y0 = split_tau(y)
        if b:
            x0 = TAU * x0 * TAU
        alg, u = self.alg, self.alg.u
        kl = alg.kl
        lmul, ldesc, length_ = u.lmul, u.ldesc, u.length
        word = reduced_word(x0)
        vec: dict[int, dict[int, int]] = {u.id_of(y0): {0: 1}}
        k = len(word)
        for step, ch in enumerate(reversed(word)):
            s = int(ch)
            thr = A_VALUE - (k - step - 1)
            new: dict[int, dict[int, int]] = {}
            for w, p in vec.items():
                top = max(p)
                if ldesc[w] >> s & 1:
                    if top + 1 >= thr:
                        _acc(new, w, p, 1, 1)
                    continue
                if top >= thr:
                    sw = lmul[s][w]
                    if sw < 0:
                        u.extend(length_[w] + 1)
                        sw = lmul[s][w]
                    if self._in_cell(cell, sw):
                        _acc(new, sw, p, 0, 1)
                    for z, m in kl.mu_list(w):
                        if ldesc[z] >> s & 1 and self._in_cell(cell, z):
                            _acc(new, z, p, 0, m)
                if top - 1 >= thr:
                    _acc(new, w, p, -1, -1)
            vec = {}
            for w, p in new.items():
                if not p:
                    continue
                if max(p) > A_VALUE:
                    raise DegreeBoundViolation(
                        f"degree {max(p)} at {u.word(w)} in T~_{reduced_word(x)} C_{reduced_word(y)}"
                    )
                kept = {e: c for e, c in p.items() if e >= thr}
                if kept:
                    vec[w] = kept
                    if length_[w] > self.max_reached:
                        self.max_reached = length_[w]
        out: dict[WeylElement, int] = {}
        tw = TAU if (a + b) & 1 else None
        for w, p in vec.items():
            g = p.get(A_VALUE, 0)
            if g:
                z = u.elements[w]
                out[tw * z if tw is not None else z] = g
        return out

    def gamma(self, x, y, z) -> int:
        z = _elem(z)
        self.window.lookup(z)
        return self.row(x, y).get(z, 0)

    def gamma_hecke(self, x, y, z) -> int:
        """Same constant read off the full Hecke product C_x C_y."""
        x, y, z = _elem(x), _elem(y), _elem(z)
        for e in (x, y, z):
            self.window.lookup(e)
        prod = c_product(x, y, self.alg)
        for w, p in prod.items():
            if w in self.window.by_element and p.degree() > A_VALUE:
                raise DegreeBoundViolation(f"degree {p.degree()} at {reduced_word(w)}")
        return prod.get(z, _ZERO).coeff(A_VALUE)

    def row_hecke(self, x, y) -> dict[WeylElement, int]:
        """The gamma row from the full Hecke product, restricted to the window."""
        x, y = _elem(x), _elem(y)
        out = {}
        for w, p in c_product(x, y, self.alg).items():
            if w in self.window.by_element:
                if p.degree() > A_VALUE:
                    raise DegreeBoundViolation(f"degree {p.degree()} at {reduced_word(w)}")
                g = p.coeff(A_VALUE)
                if g:
                    out[w] = g
        if length(x) + length(y) > self.window.max_len:
            raise WindowTooSmall("window does not cover the whole product")
        return out

    def rows_parallel(self, pairs: Iterable[tuple], threads: int = 1) -> list[dict]:
        pairs = list(pairs)
        if threads <= 1:
            return [self.row(x, y) for x, y in pairs]
        with ThreadPoolExecutor(threads) as ex:
            return list(ex.map(lambda p: self.row(*p), pairs))


def _acc(out: dict, key: int, p: dict, shift: int, mult: int) -> None:
    cur = out.get(key)
    if cur is None:
        cur = out[key] = {}
    for e, c in p.items():
        e += shift
        n = cur.get(e, 0) + mult * c
        if n:
            cur[e] = n
        else:
            del cur[e]


_TABLES: dict[int, GammaTable] = {}


def default_table(max_len: int = 22) -> GammaTable:
    t = _TABLES.get(max_len)
    if t is None:
        t = _TABLES[max_len] = GammaTable(max_len)
    return t


def gamma(x, y, z, window: CellWindow | int | None = None, method: str = "module") -> int:
    """gamma_{x,y,z} for x, y, z in c (CellPoints or WeylElements)."""
    if window is None:
        window = max(22, length(_elem(x)) + length(_elem(y)))
    table = default_table(window) if isinstance(window, int) else GammaTable(window)
    if method == "module":
        return table.gamma(x, y, z)
    if method == "hecke":
        return table.gamma_hecke(x, y, z)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# J elements


class JElement:
    """Finite Z-combination of basis elements t_x, x in c."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[CellPoint, int] | None = None):
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, p: CellPoint) -> "JElement":
        return cls({p: 1})

    def __add__(self, other: "JElement") -> "JElement":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return JElement(out)

    def __neg__(self) -> "JElement":
        return JElement({p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "JElement") -> "JElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "JElement":
        return JElement({p: k * c for p, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, JElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def by_params(self) -> dict[tuple, int]:
        return {(p.left_cell, p.right_cell, p.i, p.j, p.eps): c for p, c in self.terms.items()}

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c}*t[{p.left_cell},{p.right_cell},{p.i},{p.j},{p.eps}]"
            for p, c in sorted(self.terms.items(), key=lambda kv: (kv[0].length, repr(kv[0])))
        )
        return f"JElement({body or '0'})"


def t_multiply(a: JElement, b: JElement, window: CellWindow | int, table: GammaTable | None = None) -> JElement:
    """Bilinear extension of t_x t_y = sum_z gamma_{x,y,z} t_z."""
    if table is None:
        table = GammaTable(window) if not isinstance(window, int) else default_table(window)
    win = table.window
    out: dict[CellPoint, int] = {}
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            for z, g in table.row(x, y).items():
                p = win.lookup(z)
                out[p] = out.get(p, 0) + cx * cy * g
    return JElement(out)


# ---------------------------------------------------------------------------
# Symmetries


def _report(identity: str, n: int, violations: list) -> dict:
    return {"identity": identity, "sample-size": n, "violations": violations}


def _words(*xs) -> list[str]:
    return [reduced_word(_elem(x)) for x in xs]


def verify_gamma_symmetries(sample: Iterable[tuple], table: GammaTable, stars: bool = True) -> list[dict]:
    """Check the cyclic, inverse, twist and (optionally) star symmetries of gamma.

    Triples whose companion products leave the window are skipped and not
    counted.
    """
    sample = [tuple(_elem(e) for e in t) for t in sample]
    win = table.window
    checks = {"cyclic": [], "inverse": [], "twist": [], "star": []}
    counts = dict.fromkeys(checks, 0)

    def g(x, y, z):
        return table.gamma(x, y, z)

    for x, y, z in sample:
        base = g(x, y, z)
        xi, yi, zi = x.inverse(), y.inverse(), z.inverse()
        cases = {
            "cyclic": [(y, zi, xi), (zi, x, yi)],
            "inverse": [(yi, xi, zi)],
            "twist": [(TAU * x, y, TAU * z), (x, y * TAU, z * TAU), (TAU * x, y * TAU, TAU * z * TAU)],
        }
        for name, triples in cases.items():
            for t in triples:
                try:
                    val = g(*t)
                except WindowTooSmall:
                    continue
                counts[name] += 1
                if val != base:
                    checks[name].append({"triple": _words(x, y, z), "image": _words(*t), "expected": base, "got": val})
        # second form of (f): gamma_{x w, tau y, z} = gamma_{x, w tau y, z}
        try:
            lhs, rhs = g(x * TAU, TAU * y, z), g(x, y, z)
            counts["twist"] += 1
            if lhs != rhs:
                checks["twist"].append({"triple": _words(x * TAU, TAU * y, z), "expected": rhs, "got": lhs})
        except WindowTooSmall:
            pass
        if stars:
            t = _star_image(x, y, z)
            if t is not None and all(e in win.by_element for e in t):
                try:
                    val = g(*t)
                except WindowTooSmall:
                    val = None
                if val is not None:
                    counts["star"] += 1
                    if val != base:
                        checks["star"].append({"triple": _words(x, y, z), "image": _words(*t), "expected": base, "got": val})
    return [_report(k, counts[k], v) for k, v in checks.items()]


_PAIRS = ((0, 2), (1, 2), (2, 3))


def _star_image(x, y, z):
    """(*x#, #y⋆, *z⋆) for the first choice of pairs where all six stars are defined."""
    for a in _PAIRS:
        for b in _PAIRS:
            for c in _PAIRS:
                L_a, R_b = StarContext(a, "left"), StarContext(b, "right")
                L_b, R_c = StarContext(b, "left"), StarContext(c, "right")
                try:
                    xs = star(star(x, L_a), R_b)
                    ys = star(star(y, L_b), R_c)
                    zs = star(star(z, L_a), R_c)
                except NotInString:
                    continue
                return xs, ys, zs
    return None


def verify_string_identities(quads: Iterable[tuple], table: GammaTable) -> list[dict]:
    """The two string identities for the order-4 pair {r2, r3}.

    Each sample is (x, u, z); every choice (r, t) in {(2,3), (3,2)} for which
    either shape applies is checked.
    """
    viol_a, viol_b = [], []
    n_a = n_b = 0
    for x, u, z in quads:
        x, u, z = _elem(x), _elem(u), _elem(z)
        for r, t in ((2, 3), (3, 2)):
            R, T = SIMPLE[r], SIMPLE[t]
            rtrt = R * T * R * T
            # (a): x = t r w, z = t r v
            w, v = R * T * x, R * T * z
            if (
                length(w) == length(x) - 2
                and length(v) == length(z) - 2
                and length(rtrt * w) == length(w) + 4
                and length(rtrt * v) == length(v) + 4
            ):
                try:
                    lhs = table.gamma(x, u, z)
                    rhs = table.gamma(R * w, u, R * v) + table.gamma(R * w, u, R * T * R * v)
                except (WindowTooSmall, KeyError):
                    pass
                else:
                    n_a += 1
                    if lhs != rhs:
                        viol_a.append({"x": _words(x, u, z), "lhs": lhs, "rhs": rhs})
            # (b): u = u' t, z = v' t r
            up, vp = u * T, z * R * T
            if (
                length(up) == length(u) - 1
                and length(vp) == length(z) - 2
                and length(up * rtrt) == length(up) + 4
                and length(vp * rtrt) == length(vp) + 4
            ):
                try:
                    lhs = table.gamma(x, up * T, vp * T * R * T) + table.gamma(x, up * T, vp * T)
                    rhs = table.gamma(x, up * T * R, vp * T * R)
                except (WindowTooSmall, KeyError):
                    pass
                else:
                    n_b += 1
                    if lhs != rhs:
                        viol_b.append({"x": _words(x, u, z), "lhs": lhs, "rhs": rhs})
    return [_report("string-left", n_a, viol_a), _report("string-right", n_b, viol_b)]


def _string_shape_left(x: WeylElement, r: int, t: int) -> bool:
    R, T = SIMPLE[r], SIMPLE[t]
    w = R * T * x
    return length(w) == length(x) - 2 and length(R * T * R * T * w) == length(w) + 4


def _string_shape_right(u: WeylElement, z: WeylElement, r: int, t: int) -> bool:
    R, T = SIMPLE[r], SIMPLE[t]
    up, vp = u * T, z * R * T
    rtrt = R * T * R * T
    return (
        length(up) == length(u) - 1
        and length(vp) == length(z) - 2
        and length(up * rtrt) == length(up) + 4
        and length(vp * rtrt) == length(vp) + 4
    )


def string_samples(table: GammaTable, points: Iterable[CellPoint]) -> list[tuple]:
    """Triples (x, u, z) to which one of the two string identities applies.

    Candidates for z are read off the rows on both sides of each identity, so
    every triple where some side is nonzero is included.
    """
    pts = list(points)
    by_right: dict[str, list[CellPoint]] = {}
    by_left: dict[str, list[CellPoint]] = {}
    for p in pts:
        by_right.setdefault(p.right_cell, []).append(p)
        by_left.setdefault(p.left_cell, []).append(p)
    out = set()
    for r, t in ((2, 3), (3, 2)):
        R, T = SIMPLE[r], SIMPLE[t]
        for x in pts:
            if not _string_shape_left(x.element, r, t):
                continue
            for u in by_right.get(x.left_cell, ()):
                try:
                    cands = set(table.row(x.element, u.element))
                    for z in table.row(T * x.element, u.element):
                        cands.update((T * z, T * R * T * z))
                except (WindowTooSmall, KeyError):
                    continue
                out.update((x.element, u.element, z) for z in cands if _string_shape_left(z, r, t))
        for u in pts:
            if length(u.element * T) != length(u.element) - 1:
                continue
            for x in by_left.get(u.right_cell, ()):
                try:
                    cands = set(table.row(x.element, u.element * R))
                    for z in table.row(x.element, u.element):
                        cands.update((z * T, z * R))
                except (WindowTooSmall, KeyError):
                    continue
                out.update(
                    (x.element, u.element, z) for z in cands if _string_shape_right(u.element, z, r, t)
                )
    return sorted(out, key=lambda s: tuple(reduced_word(e) for e in s))


def verify_commutativity(points: Iterable, table: GammaTable) -> dict:
    """t_x t_y = t_y t_x on a diagonal block Γ ∩ Γ^{-1}."""
    pts = [_elem(p) for p in points]
    viol, n = [], 0
    for i, x in enumerate(pts):
        for y in pts[i:]:
            n += 1
            if table.row(x, y) != table.row(y, x):
                viol.append({"x": reduced_word(x), "y": reduced_word(y)})
    return _report("commutativity", n, viol)


# ---------------------------------------------------------------------------
# The recursion on Γ012 ∩ Γ012^{-1}

Idx = tuple[int, int, int]  # (i, j, eps)


def rule_x10(i: int, j: int) -> dict[tuple[int, int], int]:
    """t_{x10} t_{x_ij} = t_{i+1,j} + t_{i+1,j-1} + t_{i-1,j+1} + t_{i-1,j}."""
    return _clean({(i + 1, j): 1, (i + 1, j - 1): 1, (i - 1, j + 1): 1, (i - 1, j): 1})


def rule_x01(i: int, j: int) -> dict[tuple[int, int], int]:
    """t_{x01} t_{x_ij} with the (1 - delta_{0,i}) t_{x_ij} term."""
    return _clean(
        {(i, j + 1): 1, (i + 2, j - 1): 1, (i, j): 0 if i == 0 else 1, (i - 2, j + 1): 1, (i, j - 1): 1}
    )


def _clean(d: dict) -> dict:
    out: dict = {}
    for (i, j), c in d.items():
        if i >= 0 and j >= 0 and c:
            out[(i, j)] = out.get((i, j), 0) + c
    return out


class _Closure:
    """t_{a,b} acting on J_{Γ012∩Γ012^{-1}}, expressed through t_{1,0} and t_{0,1}.

    For a >= 1 (from the t_{1,0} rule at (a-1, b)):
        t_{a,b} = t_{1,0} t_{a-1,b} - t_{a,b-1} - t_{a-2,b+1} - t_{a-2,b}
    and for a = 0 (the t_{0,1} rule at (0, b-1)):
        t_{0,b} = t_{0,1} t_{0,b-1} - t_{2,b-2} - t_{0,b-2}.
    """

    def __init__(self, rule10, rule01):
        self.rule10, self.rule01 = rule10, rule01
        self.memo: dict[tuple, dict] = {}

    @staticmethod
    def _apply(rule, vec: dict) -> dict:
        out: dict = {}
        for (i, j), c in vec.items():
            for k, g in rule(i, j).items():
                out[k] = out.get(k, 0) + c * g
        return {k: c for k, c in out.items() if c}

    def act(self, a: int, b: int, target: tuple[int, int]) -> dict:
        """t_{a,b} t_target as a map (i, j) -> coefficient."""
        if a < 0 or b < 0:
            return {}
        key = (a, b, target)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if (a, b) == (0, 0):
            out = {target: 1}
        elif a >= 1:
            out = self._apply(self.rule10, self.act(a - 1, b, target))
            for sub in ((a, b - 1), (a - 2, b + 1), (a - 2, b)):
                for k, c in self.act(*sub, target).items():
                    out[k] = out.get(k, 0) - c
        else:
            out = self._apply(self.rule01, self.act(0, b - 1, target))
            for sub in ((2, b - 2), (0, b - 2)):
                for k, c in self.act(*sub, target).items():
                    out[k] = out.get(k, 0) - c
        out = {k: c for k, c in out.items() if c}
        self.memo[key] = out
        return out


def recursion_closure(k: int, l: int, window: CellWindow | int, table: GammaTable | None = None) -> dict:
    """All products t_{a,b,e} t_{i,j,f} with a <= k, b <= l, i <= k, j <= l.

    The rows of t_{x10} and t_{x01} against t_{x00}, t_{x10}, t_{x01} are
    computed from Hecke products first and must agree with the two product
    rules; after that no further Hecke computation is done.  Returns a map
    ((a,b,e), (i,j,f)) -> {(m,n,e+f mod 2): coefficient}.
    """
    if table is None:
        table = default_table(window) if isinstance(window, int) else GammaTable(window)
    win = table.window
    x10 = win.by_params.get(("G012", "G012", 1, 0, 0))
    x01 = win.by_params.get(("G012", "G012", 0, 1, 0))
    if x10 is None or x01 is None:
        raise WindowTooSmall("window does not contain x10 and x01")
    for (i, j) in ((0, 0), (1, 0), (0, 1)):
        y = win.by_params[("G012", "G012", i, j, 0)]
        for x, rule in ((x10, rule_x10), (x01, rule_x01)):
            got = {win.lookup(z).params[:2]: c for z, c in table.row(x, y).items()}
            if got != rule(i, j):
                raise AssertionError(
                    f"Hecke row for {x.params} * {(i, j)} is {got}, rule gives {rule(i, j)}"
                )
    closure = _Closure(rule_x10, rule_x01)
    out = {}
    for a in range(k + 1):
        for b in range(l + 1):
            for i in range(k + 1):
                for j in range(l + 1):
                    prod = closure.act(a, b, (i, j))
                    for e in (0, 1):
                        for f in (0, 1):
                            row = {(m, n, (e + f) & 1): c for (m, n), c in prod.items()}
                            for m, n, ee in row:
                                if ("G012", "G012", m, n, ee) not in win.by_params:
                                    raise WindowTooSmall(f"t_({m},{n}) lies outside the window")
                            out[((a, b, e), (i, j, f))] = row
    return out


__all__ = [
    "A_VALUE",
    "DegreeBoundViolation",
    "GammaTable",
    "JElement",
    "WindowTooSmall",
    "default_table",
    "gamma",
    "rule_x10",
    "rule_x01",
    "recursion_closure",
    "t_multiply",
    "verify_commutativity",
    "verify_gamma_symmetries",
    "string_samples",
    "verify_string_identities",
]
