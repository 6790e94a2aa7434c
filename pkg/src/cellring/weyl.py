"""Extended affine Weyl group of type B~3 attached to Sp6.

Elements are affine maps x -> u(x) + t of Z^3 where u is a signed
permutation.  The Coxeter generators are

    r1: swap x1, x2      r2: swap x2, x3      r3: x3 -> -x3
    r0: (x1, x2, x3) -> (1 - x2, 1 - x1, x3)

and tau is the unique length-0 element outside the affine Weyl group W'.

Heavy computations never touch ``WeylElement`` directly; they run on a
``Universe``, a breadth-first table of W' indexed by small integers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

GENERATORS = (0, 1, 2, 3)
TAU_TOKEN = "t"

# Coroots of the nine positive roots of C3; the affine hyperplanes are
# <c, x> = k for integers k.
_COROOTS = (
    (1, -1, 0), (1, 0, -1), (0, 1, -1),
    (1, 1, 0), (1, 0, 1), (0, 1, 1),
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
)
# A point of the fundamental alcove, scaled by 12 so that all arithmetic
# stays integral and no hyperplane is hit.
_ALCOVE_POINT = (5, 3, 1)
_SCALE = 12


class NotInUniverse(KeyError):
    """Raised when an element is longer than the universe allows."""


@dataclass(frozen=True, slots=True)
class WeylElement:
    """The affine map x -> (signs[i] * x[perm[i]] + trans[i])_i."""

    perm: tuple[int, int, int]
    signs: tuple[int, int, int]
    trans: tuple[int, int, int]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self o other)(x)_i = s_i * other(x)[p_i] + t_i
        p, s, t = self.perm, self.signs, self.trans
        op, os_, ot = other.perm, other.signs, other.trans
        return WeylElement(
            (op[p[0]], op[p[1]], op[p[2]]),
            (s[0] * os_[p[0]], s[1] * os_[p[1]], s[2] * os_[p[2]]),
            (s[0] * ot[p[0]] + t[0], s[1] * ot[p[1]] + t[1], s[2] * ot[p[2]] + t[2]),
        )

    def apply(self, x: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.signs[i] * x[self.perm[i]] + self.trans[i] for i in range(3))

    def inverse(self) -> "WeylElement":
        perm = [0, 0, 0]
        signs = [0, 0, 0]
        for i in range(3):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        trans = tuple(-signs[j] * self.trans[perm[j]] for j in range(3))
        return WeylElement(tuple(perm), tuple(signs), trans)

    def in_affine_subgroup(self) -> bool:
        """True iff the element lies in W' (even translation sum)."""
        return sum(self.trans) % 2 == 0

    def __repr__(self) -> str:
        return f"WeylElement({reduced_word(self)!r})"


IDENTITY = WeylElement((0, 1, 2), (1, 1, 1), (0, 0, 0))
R0 = WeylElement((1, 0, 2), (-1, -1, 1), (1, 1, 0))
R1 = WeylElement((1, 0, 2), (1, 1, 1), (0, 0, 0))
R2 = WeylElement((0, 2, 1), (1, 1, 1), (0, 0, 0))
R3 = WeylElement((0, 1, 2), (1, 1, -1), (0, 0, 0))
SIMPLE = (R0, R1, R2, R3)


def length(w: WeylElement) -> int:
    """Number of affine hyperplanes separating the base alcove from its image."""
    p = _ALCOVE_POINT
    wp = tuple(w.signs[i] * p[w.perm[i]] + _SCALE * w.trans[i] for i in range(3))
    total = 0
    for c in _COROOTS:
        a = c[0] * p[0] + c[1] * p[1] + c[2] * p[2]
        b = c[0] * wp[0] + c[1] * wp[1] + c[2] * wp[2]
        lo, hi = (a, b) if a < b else (b, a)
        total += (hi - 1) // _SCALE - lo // _SCALE
    return total


def _find_tau() -> WeylElement:
    found = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            for trans in product((-1, 0, 1), repeat=3):
                w = WeylElement(perm, signs, trans)
                if not w.in_affine_subgroup() and length(w) == 0:
                    found.append(w)
    if len(found) != 1:
        raise RuntimeError(f"expected one length-0 element outside W', got {len(found)}")
    return found[0]


TAU = _find_tau()

_TOKENS = {"0": R0, "1": R1, "2": R2, "3": R3, TAU_TOKEN: TAU}


def evaluate(word: str) -> WeylElement:
    """Evaluate a word over {0,1,2,3,t}; the empty word is the identity."""
    w = IDENTITY
    for ch in word:
        try:
            w = w * _TOKENS[ch]
        except KeyError:
            raise ValueError(f"bad token {ch!r} in word {word!r}") from None
    return w


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def generator(s: int | str) -> WeylElement:
    return _TOKENS[str(s)]


def split_tau(w: WeylElement) -> tuple[int, WeylElement]:
    """Write w = tau^eps * w' with w' in W'."""
    if w.in_affine_subgroup():
        return 0, w
    return 1, TAU * w


def left_descents(w: WeylElement) -> frozenset[int]:
    lw = length(w)
    return frozenset(s for s in GENERATORS if length(SIMPLE[s] * w) < lw)


def right_descents(w: WeylElement) -> frozenset[int]:
    lw = length(w)
    return frozenset(s for s in GENERATORS if length(w * SIMPLE[s]) < lw)


def reduced_word(w: WeylElement) -> str:
    """ShortLex-least reduced word, with a leading 't' for the tau coset."""
    eps, w = split_tau(w)
    out = [TAU_TOKEN] if eps else []
    lw = length(w)
    while lw:
        for s in GENERATORS:
            v = SIMPLE[s] * w
            if length(v) < lw:
                out.append(str(s))
                w, lw = v, lw - 1
                break
    return "".join(out)


def is_reduced(word: str) -> bool:
    return sum(ch != TAU_TOKEN for ch in word) == length(evaluate(word))


def coxeter_order(a: WeylElement, limit: int = 64) -> int:
    x = a
    for k in range(1, limit + 1):
        if x == IDENTITY:
            return k
        x = x * a
    raise ValueError("element of infinite order")


class Universe:
    """All elements of W' up to a length bound, indexed by breadth-first order.

    Ids are assigned in order of increasing length, so id 0 is the identity
    and ``id_a < id_b`` whenever ``length(a) < length(b)``.  ``lmul[s][i]``
    and ``rmul[s][i]`` give the ids of ``r_s * w_i`` and ``w_i * r_s`` (or -1
    when that element is beyond the bound).  ``ldesc``/``rdesc`` are
    bitmasks of the descent sets.
    """

    def __init__(self, max_len: int = 0):
        self.max_len = -1
        self.elements: list[WeylElement] = []
        self.index: dict[WeylElement, int] = {}
        self.length: list[int] = []
        self.lmul: list[list[int]] = [[] for _ in GENERATORS]
        self.rmul: list[list[int]] = [[] for _ in GENERATORS]
        self.ldesc: list[int] = []
        self.rdesc: list[int] = []
        self.level_start: list[int] = []
        self._lock = threading.RLock()
        self._intervals: dict[int, frozenset[int]] = {}
        self._bruhat: dict[tuple[int, int], bool] = {}
        self.extend(max_len)

    def __len__(self) -> int:
        return len(self.elements)

    def extend(self, max_len: int) -> None:
        with self._lock:
            while self.max_len < max_len:
                self._add_level()

    def _add_level(self) -> None:
        n = self.max_len + 1
        start = len(self.elements)
        if n == 0:
            new = [IDENTITY]
        else:
            prev_start = self.level_start[n - 1]
            seen: set[WeylElement] = set()
            new = []
            for i in range(prev_start, start):
                w = self.elements[i]
                for s in GENERATORS:
                    v = SIMPLE[s] * w
                    if v not in self.index and v not in seen:
                        seen.add(v)
                        new.append(v)
        self.level_start.append(start)
        for w in new:
            self.index[w] = len(self.elements)
            self.elements.append(w)
            self.length.append(n)
            for s in GENERATORS:
                self.lmul[s].append(-1)
                self.rmul[s].append(-1)
            self.ldesc.append(0)
            self.rdesc.append(0)
        # wire up multiplication between this level and the previous one
        for i in range(start, len(self.elements)):
            w = self.elements[i]
            for s in GENERATORS:
                j = self.index.get(SIMPLE[s] * w)
                if j is not None and j < start:
                    self.lmul[s][i] = j
                    self.lmul[s][j] = i
                    self.ldesc[i] |= 1 << s
                k = self.index.get(w * SIMPLE[s])
                if k is not None and k < start:
                    self.rmul[s][i] = k
                    self.rmul[s][k] = i
                    self.rdesc[i] |= 1 << s
        self.max_len = n

    def id_of(self, w: WeylElement) -> int:
        if not w.in_affine_subgroup():
            raise ValueError("element is not in W'")
        i = self.index.get(w)
        if i is None:
            lw = length(w)
            if lw > self.max_len:
                self.extend(lw)
                i = self.index.get(w)
            if i is None:
                raise NotInUniverse(w)
        return i

    def id_of_word(self, word: str) -> int:
        return self.id_of(evaluate(word))

    def lower_interval(self, i: int) -> frozenset[int]:
        """Ids of {y : y <= w_i}, via [e,w] = [e,sw] u s[e,sw] for s in L(w)."""
        out = self._intervals.get(i)
        if out is not None:
            return out
        chain = []
        j = i
        while j not in self._intervals and self.length[j] > 0:
            chain.append(j)
            j = self.lmul[_lowest_bit(self.ldesc[j])][j]
        if self.length[j] == 0:
            self._intervals[j] = frozenset((j,))
        for k in reversed(chain):
            s = _lowest_bit(self.ldesc[k])
            base = self._intervals[self.lmul[s][k]]
            lm = self.lmul[s]
            self._intervals[k] = base | frozenset(lm[y] for y in base)
        return self._intervals[i]

    def bruhat_leq(self, y: int, w: int) -> bool:
        """Lifting recursion on the smallest left descent s of w."""
        key = (y, w)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        ly, lw = self.length[y], self.length[w]
        if ly >= lw:
            out = y == w
        else:
            s = _lowest_bit(self.ldesc[w])
            sw, sy = self.lmul[s][w], self.lmul[s][y]
            if self.ldesc[y] >> s & 1:
                out = self.bruhat_leq(sy, sw)
            else:
                out = self.bruhat_leq(y, sw) or self.bruhat_leq(sy, sw)
        self._bruhat[key] = out
        return out

    def word(self, i: int) -> str:
        out = []
        ld, lm = self.ldesc, self.lmul
        while self.length[i]:
            s = _lowest_bit(ld[i])
            out.append(str(s))
            i = lm[s][i]
        return "".join(out)


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(s for s in GENERATORS if mask >> s & 1)


def set_to_mask(gens) -> int:
    m = 0
    for s in gens:
        m |= 1 << s
    return m


_DEFAULT: Universe | None = None
_DEFAULT_LOCK = threading.Lock()


def default_universe() -> Universe:
    global _DEFAULT
    with _DEFAULT_LOCK:
        if _DEFAULT is None:
            _DEFAULT = Universe(8)
        return _DEFAULT


def bruhat_leq(y: WeylElement, w: WeylElement) -> bool:
    """Bruhat order; elements of different tau-cosets are incomparable."""
    ey, y0 = split_tau(y)
    ew, w0 = split_tau(w)
    if ey != ew:
        return False
    ly, lw = length(y0), length(w0)
    if ly > lw:
        return False
    u = default_universe()
    u.extend(lw)
    return u.bruhat_leq(u.id_of(y0), u.id_of(w0))


def lower_interval(w: WeylElement) -> set[WeylElement]:
    eps, w0 = split_tau(w)
    u = default_universe()
    u.extend(length(w0))
    ids = u.lower_interval(u.id_of(w0))
    if eps:
        return {TAU * u.elements[i] for i in ids}
    return {u.elements[i] for i in ids}


def elements_up_to_length(max_len: int) -> Iterator[WeylElement]:
    """Every element of W of length <= max_len, once, both tau-cosets."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    u = default_universe()
    u.extend(max_len)
    stop = u.level_start[max_len + 1] if max_len + 1 < len(u.level_start) else len(u)
    for i in range(stop):
        yield u.elements[i]
    for i in range(stop):
        yield TAU * u.elements[i]
