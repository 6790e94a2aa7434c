"""The representation ring of Sp4(C) x Z/2Z.

Weights are written in the fundamental basis (m1, m2) = m1*lam1 + m2*lam2.
Internally the orthogonal basis is used, with lam1 = e1 and lam2 = e1 + e2,
so (m1, m2) has e-coordinates (m1 + m2, m2).  Simple roots are e1 - e2 and
2 e2; rho = (2, 1).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

Weight = tuple[int, int]

RHO = (2, 1)
POSITIVE_ROOTS = ((1, -1), (1, 1), (2, 0), (0, 2))
SIMPLE_ROOTS = ((1, -1), (0, 2))


def to_e(w: Weight) -> Weight:
    m1, m2 = w
    return (m1 + m2, m2)


def from_e(x: Weight) -> Weight:
    a, b = x
    return (a - b, b)


def _dot(x: Weight, y: Weight) -> int:
    return x[0] * y[0] + x[1] * y[1]


# The Weyl group of C2: signed permutations of (e1, e2), with signs.
def _weyl_group() -> list[tuple[tuple[int, int], tuple[int, int], int]]:
    out = []
    for perm in ((0, 1), (1, 0)):
        for signs in itertools.product((1, -1), repeat=2):
            det = (1 if perm == (0, 1) else -1) * signs[0] * signs[1]
            out.append((perm, signs, det))
    return out


WEYL_GROUP = _weyl_group()


def _act(g, x: Weight) -> Weight:
    perm, signs, _ = g
    return (signs[0] * x[perm[0]], signs[1] * x[perm[1]])


def _dominant_e(x: Weight) -> Weight:
    a, b = abs(x[0]), abs(x[1])
    return (a, b) if a >= b else (b, a)


@dataclass(frozen=True, order=True)
class IrrClass:
    """eps^k (x) V(a lam1 + b lam2)."""

    a: int
    b: int
    eps: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("highest weight must be dominant")
        if self.eps not in (0, 1):
            raise ValueError("eps is a bit")

    @property
    def weight(self) -> Weight:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"{'e' if self.eps else ''}V({self.a},{self.b})"

    @classmethod
    def parse(cls, s: str) -> "IrrClass":
        m = re.fullmatch(r"\s*(e?)V\((\d+),(\d+)\)\s*", s)
        if not m:
            raise ValueError(f"cannot parse irreducible class {s!r}")
        return cls(int(m.group(2)), int(m.group(3)), 1 if m.group(1) else 0)


def dim(c: IrrClass) -> int:
    """Weyl dimension formula for C2."""
    p, q = to_e(c.weight)
    p, q = p + RHO[0], q + RHO[1]
    return (p - q) * (p + q) * p * q // 6


def weight_orbit(w: Weight) -> set[Weight]:
    x = to_e(w)
    return {from_e(_act(g, x)) for g in WEYL_GROUP}


@lru_cache(maxsize=None)
def _dominant_multiplicities(lam: Weight) -> dict[Weight, int]:
    """Freudenthal recursion; keys are dominant weights in e-coordinates."""
    top = to_e(lam)
    lr = (top[0] + RHO[0], top[1] + RHO[1])
    norm_top = _dot(lr, lr)
    mult: dict[Weight, int] = {top: 1}

    def m(x: Weight) -> int:
        return mult.get(_dominant_e(x), 0)

    # dominant weights below top, by increasing depth n1 + n2
    cands = []
    for n1 in range(0, 2 * top[0] + 1):
        for n2 in range(0, 2 * top[0] + 1):
            x = (top[0] - n1, top[1] + n1 - 2 * n2)
            if x[0] >= x[1] >= 0 and (n1, n2) != (0, 0):
                cands.append((n1 + n2, x))
    for _, x in sorted(cands):
        xr = (x[0] + RHO[0], x[1] + RHO[1])
        den = norm_top - _dot(xr, xr)
        if den <= 0:
            continue
        num = 0
        for alpha in POSITIVE_ROOTS:
            k = 1
            while True:
                y = (x[0] + k * alpha[0], x[1] + k * alpha[1])
                if abs(y[0]) > top[0] or abs(y[1]) > top[0]:
                    break
                num += m(y) * _dot(y, alpha)
                k += 1
        val = 2 * num
        if val % den:
            raise ArithmeticError(f"Freudenthal step not integral at {x}")
        if val:
            mult[x] = val // den
    return mult


def weight_multiplicity(mu: Weight, lam: IrrClass | Weight) -> int:
    """dim V(lam)_mu, both in the fundamental basis."""
    w = lam.weight if isinstance(lam, IrrClass) else lam
    return _dominant_multiplicities(tuple(w)).get(_dominant_e(to_e(mu)), 0)


class Character:
    """Two-variable Laurent polynomial: weight (fundamental basis) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, int] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Character(out)

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scale(-1)

    def scale(self, k: int) -> "Character":
        return Character({w: k * c for w, c in self.terms.items()})

    def __mul__(self, other: "Character") -> "Character":
        out: dict[Weight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = (w1[0] + w2[0], w1[1] + w2[1])
                out[w] = out.get(w, 0) + c1 * c2
        return Character(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.terms == other.terms

    def invert(self) -> "Character":
        """Substitute each variable by its inverse."""
        return Character({(-a, -b): c for (a, b), c in self.terms.items()})

    def degree(self) -> int:
        return sum(self.terms.values())

    def __repr__(self) -> str:
        return f"Character({dict(sorted(self.terms.items()))})"


def character(c: IrrClass | Weight) -> Character:
    """Formal character of V(lam) (the Z/2 factor is ignored)."""
    w = c.weight if isinstance(c, IrrClass) else c
    out = {}
    for x, m in _dominant_multiplicities(tuple(w)).items():
        for g in WEYL_GROUP:
            out[from_e(_act(g, x))] = m
    return Character(out)


class VirtualRep:
    """Finite Z-combination of irreducible classes."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[IrrClass, int] | Iterable[tuple[IrrClass, int]] | None = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        out: dict[IrrClass, int] = {}
        for k, c in items:
            out[k] = out.get(k, 0) + c
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def irr(cls, c: IrrClass) -> "VirtualRep":
        return cls({c: 1})

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        return VirtualRep(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "VirtualRep") -> "VirtualRep":
        return self + other.scale(-1)

    def scale(self, k: int) -> "VirtualRep":
        return VirtualRep({c: k * m for c, m in self.terms.items()})

    def __mul__(self, other: "VirtualRep") -> "VirtualRep":
        out: dict[IrrClass, int] = {}
        for x, a in self.terms.items():
            for y, b in other.terms.items():
                for z, c in tensor(x, y).terms.items():
                    out[z] = out.get(z, 0) + a * b * c
        return VirtualRep(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, VirtualRep) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def dim(self) -> int:
        return sum(m * dim(c) for c, m in self.terms.items())

    def dual(self) -> "VirtualRep":
        # every irreducible of Sp4 x Z/2 is self-dual
        return VirtualRep(self.terms)

    def is_irreducible(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{m}*" if m != 1 else "") + str(c) for c, m in sorted(self.terms.items())
        )

    def to_json(self) -> dict[str, int]:
        return {str(c): m for c, m in sorted(self.terms.items())}


@lru_cache(maxsize=None)
def _klimyk(x: Weight, y: Weight) -> tuple[tuple[Weight, int], ...]:
    lam = to_e(x)
    out: dict[Weight, int] = {}
    for mu, m in character(y).terms.items():
        e = to_e(mu)
        nu = (lam[0] + e[0] + RHO[0], lam[1] + e[1] + RHO[1])
        for g in WEYL_GROUP:
            t = _act(g, nu)
            if t[0] > t[1] > 0:
                hw = (t[0] - RHO[0], t[1] - RHO[1])
                out[hw] = out.get(hw, 0) + g[2] * m
                break
        # weights on a wall have no strictly dominant image and drop out
    for hw, c in out.items():
        if c < 0:
            raise ArithmeticError(f"negative multiplicity {c} at {from_e(hw)} in V{x} x V{y}")
    return tuple(sorted((from_e(hw), c) for hw, c in out.items() if c))


def tensor(x: IrrClass, y: IrrClass) -> VirtualRep:
    """Decomposition of x (x) y by the Klimyk (Brauer) weight-shift rule."""
    eps = (x.eps + y.eps) & 1
    return VirtualRep({IrrClass(a, b, eps): c for (a, b), c in _klimyk(x.weight, y.weight)})


def tensor_by_characters(x: IrrClass, y: IrrClass) -> VirtualRep:
    """Independent oracle: peel off highest weights from the product character."""
    eps = (x.eps + y.eps) & 1
    rest = character(x) * character(y)
    out: dict[IrrClass, int] = {}
    while rest.terms:
        # a dominant weight maximal for the height m1 + m2 + (e-height) ordering
        dom = [w for w in rest.terms if w[0] >= 0 and w[1] >= 0]
        top = max(dom, key=lambda w: (to_e(w)[0] + to_e(w)[1], w))
        c = rest.terms[top]
        if c < 0:
            raise ArithmeticError(f"negative multiplicity at {top}")
        out[IrrClass(top[0], top[1], eps)] = c
        rest = rest - character(top).scale(c)
    return VirtualRep(out)


def product_rule_lambda1(i: int, j: int) -> VirtualRep:
    """V(lam1) V(i lam1 + j lam2) as the four-term sum."""
    return _rule([(i + 1, j), (i + 1, j - 1), (i - 1, j + 1), (i - 1, j)])


def product_rule_lambda2(i: int, j: int) -> VirtualRep:
    """V(lam2) V(i lam1 + j lam2) as the five-term sum with (1 - delta_{0,i})."""
    terms = [(i, j + 1), (i + 2, j - 1), (i - 2, j + 1), (i, j - 1)]
    if i:
        terms.append((i, j))
    return _rule(terms)


def _rule(pairs) -> VirtualRep:
    return VirtualRep([(IrrClass(a, b), 1) for a, b in pairs if a >= 0 and b >= 0])


__all__ = [
    "Character",
    "IrrClass",
    "VirtualRep",
    "character",
    "dim",
    "from_e",
    "product_rule_lambda1",
    "product_rule_lambda2",
    "tensor",
    "tensor_by_characters",
    "to_e",
    "weight_multiplicity",
    "weight_orbit",
]
