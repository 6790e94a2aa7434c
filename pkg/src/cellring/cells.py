"""Strings and star operations, the 24 left cells of the a = 6 cell c,
their star graphs, and enumeration / membership for c.

Cell labels are ASCII: ``G`` + R-set subscript, then ``p`` per prime and a
trailing ``h`` for a hat.  So ``G013p`` is Gamma'_{013}, ``G01ph`` is
hat-Gamma'_{01} and ``G2pph`` is hat-Gamma''_2.

Every element of c is produced from one of ten base families (plus their
inverses) parametrized by (i, j, eps), and then moved along fixed spanning
trees of the star graphs: right stars move the left cell, left stars move
the right cell.  The parameters ride along unchanged.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .weyl import (
    GENERATORS,
    IDENTITY,
    SIMPLE,
    TAU,
    WeylElement,
    evaluate,
    left_descents,
    length,
    right_descents,
)

# Coxeter orders m(r, t) for the non-commuting pairs
_ORDER = {frozenset((0, 2)): 3, frozenset((1, 2)): 3, frozenset((2, 3)): 4}


class NotInString(ValueError):
    """Raised when x is not in a string for the given pair and side."""


class OutsideWindow(KeyError):
    """An element that is not among the enumerated points of c."""


class NotFound(LookupError):
    pass


@dataclass(frozen=True)
class StarContext:
    pair: tuple[int, int]
    side: str  # "left" or "right"

    def __post_init__(self):
        if frozenset(self.pair) not in _ORDER:
            raise ValueError(f"{self.pair} is not a non-commuting pair")
        if self.side not in ("left", "right"):
            raise ValueError(f"bad side {self.side!r}")

    @property
    def order(self) -> int:
        return _ORDER[frozenset(self.pair)]


def _descents(x: WeylElement, side: str) -> frozenset[int]:
    return left_descents(x) if side == "left" else right_descents(x)


def _act(s: int, x: WeylElement, side: str) -> WeylElement:
    return SIMPLE[s] * x if side == "left" else x * SIMPLE[s]


def string_through(x: WeylElement, ctx: StarContext) -> tuple[list[WeylElement], int]:
    """The (m-1)-element string containing x, and x's 1-based position."""
    r, t = ctx.pair
    pair = {r, t}
    y = x
    peeled: list[int] = []
    while True:
        d = _descents(y, ctx.side) & pair
        if len(d) != 1:
            break
        s = next(iter(d))
        peeled.append(s)
        y = _act(s, y, ctx.side)
    if d or not peeled or len(peeled) >= ctx.order:
        raise NotInString(f"{x!r} is not in a {ctx.side} string for {ctx.pair}")
    # y is the base point w; the string is w·a, w·ab, ... (or mirrored)
    first = peeled[-1]
    other = t if first == r else r
    string = []
    z = y
    for k in range(ctx.order - 1):
        z = _act(first if k % 2 == 0 else other, z, ctx.side)
        string.append(z)
    return string, len(peeled)


def star(x: WeylElement, ctx: StarContext) -> WeylElement:
    string, i = string_through(x, ctx)
    return string[ctx.order - i - 1]


def left_star(x: WeylElement, pair: tuple[int, int]) -> WeylElement:
    return star(x, StarContext(pair, "left"))


def right_star(x: WeylElement, pair: tuple[int, int]) -> WeylElement:
    return star(x, StarContext(pair, "right"))


def commute_stars(x: WeylElement, left_ctx: StarContext, right_ctx: StarContext) -> WeylElement:
    a = star(star(x, right_ctx), left_ctx)
    b = star(star(x, left_ctx), right_ctx)
    if a != b:
        raise AssertionError(f"stars do not commute at {x!r}")
    return a


# ---------------------------------------------------------------------------
# a-function certificates


@lru_cache(maxsize=None)
def longest_parabolic_length(J: frozenset[int]) -> int:
    if len(J) >= 4:
        raise ValueError("the full generating set gives an infinite group")
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for s in J:
                v = w * SIMPLE[s]
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return max(length(w) for w in seen)


def _subsets(S: frozenset[int]):
    items = sorted(S)
    for mask in range(1 << len(items)):
        yield frozenset(items[k] for k in range(len(items)) if mask >> k & 1)


def a_lower_bound(w: WeylElement) -> int:
    """max l(w_J) over J contained in L(w) or in R(w) with W_J finite."""
    best = 0
    for D in (left_descents(w), right_descents(w)):
        for J in _subsets(D):
            if len(J) < 4:
                best = max(best, longest_parabolic_length(J))
    return best


# ---------------------------------------------------------------------------
# The 24 left cells


@dataclass(frozen=True)
class LeftCellLabel:
    name: str
    rep_word: str
    rset: frozenset[int]
    group: int

    @property
    def representative(self) -> WeylElement:
        return evaluate(self.rep_word)

    def __repr__(self) -> str:
        return self.name


_CELL_TABLE = (
    # name, representative, Y-group
    ("G012", "012012", 1),
    ("G013", "0120123", 1),
    ("G2", "01201232", 1),
    ("G23", "012012323", 2),
    ("G02", "012012320", 4),
    ("G03", "0120123203", 2),
    ("G12", "012012321", 4),
    ("G13", "0120123213", 2),
    ("G01", "0120123201", 4),
    ("G013p", "01201232013", 3),
    ("G2p", "012012320132", 3),
    ("G3", "0120123201323", 3),
    ("G02p", "01201232032", 4),
    ("G01p", "012012320321", 4),
    ("G12p", "01201232132", 4),
    ("G01ph", "012012321320", 4),
    ("G12pp", "0120123203212", 4),
    ("G13p", "01201232032123", 4),
    ("G2pp", "012012320321232", 4),
    ("G0", "0120123203212320", 4),
    ("G02pp", "0120123213202", 4),
    ("G03p", "01201232132023", 4),
    ("G2pph", "012012321320232", 4),
    ("G1", "0120123213202321", 4),
)


def _rset_from_name(name: str) -> frozenset[int]:
    digits = name[1:].rstrip("ph")
    return frozenset(int(ch) for ch in digits)


LEFT_CELLS: dict[str, LeftCellLabel] = {
    name: LeftCellLabel(name, word, _rset_from_name(name), grp) for name, word, grp in _CELL_TABLE
}

# Human-readable names for the ASCII labels.
DISPLAY_NAMES = {
    "G012": "Γ₀₁₂", "G013": "Γ₀₁₃", "G2": "Γ₂", "G23": "Γ₂₃", "G02": "Γ₀₂",
    "G03": "Γ₀₃", "G12": "Γ₁₂", "G13": "Γ₁₃", "G01": "Γ₀₁", "G013p": "Γ′₀₁₃",
    "G2p": "Γ′₂", "G3": "Γ₃", "G02p": "Γ′₀₂", "G01p": "Γ′₀₁", "G12p": "Γ′₁₂",
    "G01ph": "Γ̂′₀₁", "G12pp": "Γ″₁₂", "G13p": "Γ′₁₃", "G2pp": "Γ″₂", "G0": "Γ₀",
    "G02pp": "Γ″₀₂", "G03p": "Γ′₀₃", "G2pph": "Γ̂″₂", "G1": "Γ₁",
}

# Star-graph edges: (cell, neighbour, pair) with neighbour = cell^* for the pair.
STAR_EDGES = (
    ("G012", "G2", (2, 3)),
    ("G2", "G013", (0, 2)),
    ("G03", "G23", (0, 2)),
    ("G23", "G13", (1, 2)),
    ("G013p", "G2p", (0, 2)),
    ("G013p", "G3", (2, 3)),
    ("G02", "G02p", (2, 3)),
    ("G02p", "G01p", (1, 2)),
    ("G01p", "G12pp", (0, 2)),
    ("G12pp", "G2pp", (2, 3)),
    ("G2pp", "G0", (0, 2)),
    ("G02", "G01", (1, 2)),
    ("G2pp", "G13p", (1, 2)),
    ("G01", "G12", (0, 2)),
    ("G12", "G12p", (2, 3)),
    ("G12p", "G01ph", (0, 2)),
    ("G01ph", "G02pp", (1, 2)),
    ("G02pp", "G2pph", (2, 3)),
    ("G2pph", "G1", (1, 2)),
    ("G2pph", "G03p", (0, 2)),
)

ROOTS = {1: "G012", 2: "G03", 3: "G013p", 4: "G02"}


def _tree_paths() -> dict[str, tuple[tuple[int, int], ...]]:
    adj: dict[str, list[tuple[str, tuple[int, int]]]] = {n: [] for n in LEFT_CELLS}
    for a, b, pair in STAR_EDGES:
        adj[a].append((b, pair))
        adj[b].append((a, pair))
    paths: dict[str, tuple[tuple[int, int], ...]] = {}
    for root in ROOTS.values():
        paths[root] = ()
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b, pair in adj[a]:
                if b not in paths:
                    paths[b] = paths[a] + (pair,)
                    queue.append(b)
    return paths


STAR_PATHS = _tree_paths()


def root_of(name: str) -> str:
    return ROOTS[LEFT_CELLS[name].group]


# ---------------------------------------------------------------------------
# Base families

_ROOT_ORDER = ("G012", "G02", "G03", "G013p")

BASE_INTERSECTIONS = (
    ("G012", "G012"),
    ("G02", "G02"),
    ("G03", "G03"),
    ("G013p", "G013p"),
    ("G012", "G02"),
    ("G012", "G03"),
    ("G012", "G013p"),
    ("G02", "G03"),
    ("G02", "G013p"),
    ("G03", "G013p"),
)


def x_element(i: int, j: int, eps: int = 0) -> WeylElement:
    """tau^eps w012 (tau r3 r2 r0 r1 r2)^i (r3 r2 r0 r1)^(2j)."""
    if i < 0 or j < 0:
        raise ValueError("i, j must be nonnegative")
    return evaluate("t" * eps + "012012" + "t32012" * i + "3201" * (2 * j))


def _sandwich(s: int, x: WeylElement) -> WeylElement:
    return SIMPLE[s] * x * SIMPLE[s]


@lru_cache(maxsize=None)
def base_element(left: str, right: str, i: int, j: int, eps: int) -> WeylElement:
    """The (i, j, eps) member of Gamma_left ∩ Gamma_right^{-1} for root cells."""
    pair = (left, right)
    if pair not in BASE_INTERSECTIONS:
        if (right, left) in BASE_INTERSECTIONS:
            return base_element(right, left, i, j, eps).inverse()
        raise KeyError(f"unknown base intersection {pair}")
    x = x_element(i, j, eps)
    if pair == ("G012", "G012"):
        return x
    if pair == ("G02", "G02"):
        return _sandwich(0, right_star(left_star(x, (2, 3)), (2, 3)))
    if pair == ("G03", "G03"):
        return _sandwich(3, base_element("G02", "G02", i, j, eps))
    if pair == ("G013p", "G013p"):
        return _sandwich(1, base_element("G03", "G03", i, j, eps))
    if pair == ("G012", "G02"):
        return SIMPLE[0] * left_star(x, (2, 3))
    if pair == ("G012", "G03"):
        return SIMPLE[3] * base_element("G012", "G02", i, j, eps)
    if pair == ("G012", "G013p"):
        return SIMPLE[1] * base_element("G012", "G03", i, j, eps)
    if pair == ("G02", "G03"):
        return SIMPLE[3] * base_element("G02", "G02", i, j, eps)
    if pair == ("G02", "G013p"):
        return SIMPLE[1] * base_element("G02", "G03", i, j, eps)
    return SIMPLE[1] * base_element("G03", "G03", i, j, eps)


@dataclass(frozen=True)
class CellPoint:
    """x ∈ Γ ∩ Θ^{-1} with Γ = left_cell, Θ = right_cell."""

    element: WeylElement
    left_cell: str
    right_cell: str
    i: int
    j: int
    eps: int

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.eps)

    @property
    def length(self) -> int:
        return length(self.element)

    def inverse(self) -> "CellPoint":
        return CellPoint(self.element.inverse(), self.right_cell, self.left_cell, self.i, self.j, self.eps)


def transport(x: WeylElement, left: str, right: str) -> WeylElement:
    """Move a root-block element to the block Γ_left ∩ Γ_right^{-1}."""
    for pair in STAR_PATHS[left]:
        x = right_star(x, pair)
    for pair in STAR_PATHS[right]:
        x = left_star(x, pair)
    return x


def cell_point(left: str, right: str, i: int, j: int, eps: int) -> CellPoint:
    base = base_element(root_of(left), root_of(right), i, j, eps)
    return CellPoint(transport(base, left, right), left, right, i, j, eps)


def cell_c_base_sets(which: tuple[str, str] | str, bound: int) -> list[CellPoint]:
    """Members of a base intersection with i + j <= bound, both eps values."""
    if isinstance(which, str):
        which = tuple(which.split("|"))
    if tuple(which) not in BASE_INTERSECTIONS:
        raise KeyError(f"unknown base intersection {which}")
    left, right = which
    out = []
    for i in range(bound + 1):
        for j in range(bound + 1 - i):
            for eps in (0, 1):
                out.append(CellPoint(base_element(left, right, i, j, eps), left, right, i, j, eps))
    return out


# Lengths in every block are at least this far above 5i + 8j (checked in tests).
_MIN_OFFSET = 6


class CellWindow:
    """All enumerated elements of c with length <= max_len, indexed for lookup."""

    def __init__(self, max_len: int):
        self.max_len = max_len
        self.points: list[CellPoint] = []
        self.by_element: dict[WeylElement, CellPoint] = {}
        self.by_params: dict[tuple[str, str, int, int, int], CellPoint] = {}
        for left in LEFT_CELLS:
            for right in LEFT_CELLS:
                self._fill(left, right)
        self.points.sort(key=lambda p: (p.length, p.left_cell, p.right_cell, p.params))

    def _fill(self, left: str, right: str) -> None:
        budget = self.max_len - _MIN_OFFSET
        j = 0
        while 8 * j <= budget:
            i = 0
            while 5 * i + 8 * j <= budget:
                for eps in (0, 1):
                    p = cell_point(left, right, i, j, eps)
                    if p.length <= self.max_len:
                        if p.element in self.by_element:
                            raise AssertionError(f"duplicate element {p} / {self.by_element[p.element]}")
                        self.points.append(p)
                        self.by_element[p.element] = p
                        self.by_params[(left, right, i, j, eps)] = p
                i += 1
            j += 1

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.by_element

    def __len__(self) -> int:
        return len(self.points)

    def lookup(self, w: WeylElement) -> CellPoint:
        p = self.by_element.get(w)
        if p is None:
            raise OutsideWindow(f"{w!r} is not in the c window of length {self.max_len}")
        return p

    def block(self, left: str, right: str) -> list[CellPoint]:
        return [p for p in self.points if p.left_cell == left and p.right_cell == right]


_WINDOWS: dict[int, CellWindow] = {}
_WLOCK = threading.Lock()


def cell_c_enumerate(max_len: int) -> CellWindow:
    with _WLOCK:
        w = _WINDOWS.get(max_len)
        if w is None:
            w = _WINDOWS[max_len] = CellWindow(max_len)
        return w


def distinguished_involution(label: str, search_len: int, engine=None) -> WeylElement:
    """The unique z in Γ ∩ Γ^{-1} with z = z^{-1} and l(z) - 6 - 2δ(z) = 0."""
    from .hecke import delta

    window = cell_c_enumerate(search_len)
    found = []
    for p in window.block(label, label):
        z = p.element
        # P_{e,z} = 0 off W', so only the untwisted coset can qualify
        if z.in_affine_subgroup() and z == z.inverse() and p.length - 6 - 2 * delta(z, engine) == 0:
            found.append(z)
    if not found:
        raise NotFound(f"no distinguished involution in {label} up to length {search_len}")
    if len(found) > 1:
        raise AssertionError(f"several distinguished involutions in {label}: {found}")
    return found[0]


# ---------------------------------------------------------------------------
# Consistency checks


def verify_star_graph() -> list[dict]:
    """Each star edge maps the representative's string partner into the neighbour.

    The right star of a representative must land in an element whose right
    descent set is the R-set of the neighbouring cell.
    """
    failures = []
    for a, b, pair in STAR_EDGES:
        for src, dst in ((a, b), (b, a)):
            rep = LEFT_CELLS[src].representative
            try:
                img = right_star(rep, pair)
            except NotInString:
                failures.append({"edge": [src, dst], "reason": "not in a right string"})
                continue
            if right_descents(img) != LEFT_CELLS[dst].rset:
                failures.append({"edge": [src, dst], "reason": f"R-set {sorted(right_descents(img))}"})
    return failures


def _left_strings(u, pair: tuple[int, int], max_len: int) -> list[tuple[int, ...]]:
    r, t = pair
    m = _ORDER[frozenset(pair)]
    mask = 1 << r | 1 << t
    out = []
    for w in range(len(u.elements)):
        if u.length[w] + m - 1 > max_len or u.ldesc[w] & mask:
            continue
        for first, second in ((r, t), (t, r)):
            s, z = [], w
            for k in range(m - 1):
                z = u.lmul[first if k % 2 == 0 else second][z]
                s.append(z)
            out.append(tuple(s))
    return out


def _string_matrix(u, mt, pair, xs, ys) -> list[list[int]]:
    mask = 1 << pair[0] | 1 << pair[1]
    return [
        [mt.get((x, y), 0) if u.ldesc[x] & mask == u.ldesc[y] & mask else 0 for y in ys]
        for x in xs
    ]


def _string_rules(a: list[list[int]]) -> bool:
    if len(a) == 2:
        return a[0][0] == a[1][1] and a[0][1] == a[1][0]
    return (
        a[0][0] == a[2][2]
        and a[0][2] == a[2][0]
        and a[1][1] == a[0][0] + a[0][2]
        and a[0][1] == a[1][0] == a[1][2] == a[2][1]
    )


def verify_string_mu_identities(max_len: int = 12, engine=None) -> dict:
    """The mu~ relations between two left strings, over all string pairs in W'.

    Pairs of strings whose mu~ matrix vanishes satisfy the relations
    trivially; only the others are inspected, but all are counted.  The
    tau-coset is the image of W' under x -> tau x, which preserves mu and
    permutes the string pairs, so W' suffices.
    """
    from .hecke import KLEngine

    eng = engine if engine is not None else KLEngine()
    u = eng.u
    u.extend(max_len)
    mt: dict[tuple[int, int], int] = {}
    for w in range(len(u.elements)):
        if u.length[w] > max_len:
            break
        for z, m in eng.mu_list(w):
            mt[(z, w)] = mt[(w, z)] = m
    failures, total, inspected = [], 0, 0
    for pair in _ORDER:
        pair = tuple(sorted(pair))
        strings = _left_strings(u, pair, max_len)
        where = {x: k for k, s in enumerate(strings) for x in s}
        total += len(strings) ** 2
        cand = set()
        for x, y in mt:
            if x in where and y in where:
                cand.add((where[x], where[y]))
        for ka, kb in sorted(cand):
            inspected += 1
            a = _string_matrix(u, mt, pair, strings[ka], strings[kb])
            if not _string_rules(a):
                failures.append(
                    {"pair": list(pair), "x": [u.word(i) for i in strings[ka]], "y": [u.word(i) for i in strings[kb]], "a": a}
                )
    return {"identity": "string-mu", "sample-size": total, "inspected": inspected, "violations": failures}
