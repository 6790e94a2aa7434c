"""Exact integer Laurent polynomials in v (with q = v^2)."""

from __future__ import annotations

from typing import Iterable, Mapping

NEG_INF = float("-inf")


class LaurentPoly:
    """Sparse map exponent -> nonzero integer coefficient.

    Instances are treated as immutable; every operation returns a new one.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for k, a in items:
            if not isinstance(k, int) or not isinstance(a, int):
                raise TypeError("exponents and coefficients must be integers")
            if a:
                c[k] = c.get(k, 0) + a
                if not c[k]:
                    del c[k]
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def constant(cls, a: int) -> "LaurentPoly":
        return cls.monomial(0, a)

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable[int], shift: int = 0) -> "LaurentPoly":
        """sum_k coeffs[k] q^k, times v^shift."""
        return cls._raw({2 * k + shift: a for k, a in enumerate(coeffs) if a})

    def terms(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        c = dict(self._c)
        for k, a in other._c.items():
            b = c.get(k, 0) + a
            if b:
                c[k] = b
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -a for k, a in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly._raw({k: a * other for k, a in self._c.items()} if other else {})
        c: dict[int, int] = {}
        for k, a in self._c.items():
            for l, b in other._c.items():
                c[k + l] = c.get(k + l, 0) + a * b
        return LaurentPoly._raw({k: a for k, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly._raw({e + k: a for e, a in self._c.items()})

    def degree(self):
        return max(self._c) if self._c else NEG_INF

    def min_degree(self):
        return min(self._c) if self._c else float("inf")

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-k: a for k, a in self._c.items()})

    def to_json(self) -> dict[str, int]:
        return {str(k): a for k, a in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "LaurentPoly":
        return cls((int(k), int(a)) for k, a in obj.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_json()})"

    def __str__(self) -> str:
        return self.format("v")

    def format(self, var: str = "v") -> str:
        if not self._c:
            return "0"
        parts = []
        for k, a in sorted(self._c.items(), reverse=True):
            if k == 0:
                mono = str(abs(a))
            else:
                pw = var if k == 1 else f"{var}^{k}"
                mono = pw if abs(a) == 1 else f"{abs(a)}*{pw}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, mono))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


def add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def degree(p: LaurentPoly):
    return p.degree()


def coeff(p: LaurentPoly, k: int) -> int:
    return p.coeff(k)


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)
Q = LaurentPoly.monomial(2)
XI = LaurentPoly({1: 1, -1: 1})
