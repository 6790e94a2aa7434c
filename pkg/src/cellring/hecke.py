"""Hecke algebra of the extended affine Weyl group: T-basis arithmetic,
Kazhdan-Lusztig polynomials, the C-basis, and the Bernstein elements
S_{x1}, S_{x2}.

Conventions: q = v^2, ``C_w = v^{-l(w)} sum_{y <= w} P_{y,w}(q) T_y`` and
``T~_w = v^{-l(w)} T_w``.  Internally a Hecke element is a dict mapping a
*key* ``2 * id + eps`` (the element ``tau^eps * w_id`` of the universe) to a
dict ``exponent-of-v -> int``.  The public ``HeckeElement`` wraps the same
data with ``WeylElement`` keys and ``LaurentPoly`` coefficients.
"""

from __future__ import annotations

import json
import os
import threading
from typing import Iterable, Mapping

from .laurent import LaurentPoly
from .weyl import (
    IDENTITY,
    TAU,
    Universe,
    WeylElement,
    bruhat_leq,
    default_universe,
    evaluate,
    reduced_word,
    split_tau,
)

CACHE_FORMAT = 1
CACHE_TYPE = "B3~"

# tau r_s tau = r_{SIGMA[s]}
SIGMA = (1, 0, 2, 3)

Poly = dict[int, int]  # exponent of v -> coefficient
Vec = dict[int, Poly]  # key -> coefficient


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for k, x in enumerate(b):
        out[k] += x
    return tuple(out)


def _trim(a: list) -> tuple:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


class KLEngine:
    """Memoized Kazhdan-Lusztig columns on a ``Universe`` of W'.

    ``column(w)`` maps each ``y <= w`` with nonzero P to the tuple of
    q-coefficients of P_{y,w}.  Columns are computed by the recursion

        P_{y,w} = q^{1-c} P_{sy,v} + q^c P_{y,v}
                  - sum_{z : sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{y,z}

    with s the smallest left descent of w, v = sw and c = 1 iff sy < y.
    Writes are idempotent, so concurrent readers see either nothing or the
    final value.
    """

    def __init__(self, universe: Universe | None = None):
        self.u = universe if universe is not None else default_universe()
        self.cols: dict[int, dict[int, tuple]] = {}
        self.mus: dict[int, tuple] = {}
        # most columns repeat a handful of polynomials; share the tuples
        self._polys: dict[tuple, tuple] = {}
        self._lock = threading.RLock()

    def column(self, w: int) -> dict[int, tuple]:
        c = self.cols.get(w)
        if c is not None:
            return c
        with self._lock:
            self._compute(w)
        return self.cols[w]

    def mu_list(self, w: int) -> tuple:
        """All (z, mu(z,w)) with z < w and mu(z,w) != 0."""
        m = self.mus.get(w)
        if m is not None:
            return m
        col = self.column(w)
        length = self.u.length
        lw = length[w]
        out = []
        for y, p in col.items():
            d = lw - length[y]
            if d & 1:
                k = d >> 1
                if len(p) > k and p[k]:
                    out.append((y, p[k]))
        m = tuple(sorted(out))
        self.mus[w] = m
        return m

    def _deps(self, w: int) -> list[int]:
        u = self.u
        s = (u.ldesc[w] & -u.ldesc[w]).bit_length() - 1
        v = u.lmul[s][w]
        if v not in self.cols:
            return [v]
        return [z for z, _ in self.mu_list(v) if u.ldesc[z] >> s & 1 and z not in self.cols]

    def _compute(self, target: int) -> None:
        stack = [target]
        while stack:
            w = stack[-1]
            if w in self.cols:
                stack.pop()
                continue
            if self.u.length[w] == 0:
                self.cols[w] = {w: (1,)}
                stack.pop()
                continue
            deps = self._deps(w)
            if deps:
                stack.extend(deps)
                continue
            self.cols[w] = self._column_from_deps(w)
            stack.pop()

    def _column_from_deps(self, w: int) -> dict[int, tuple]:
        u = self.u
        length, ldesc = u.length, u.ldesc
        s = (ldesc[w] & -ldesc[w]).bit_length() - 1
        lm = u.lmul[s]
        v = lm[w]
        cv = self.cols[v]
        lw = length[w]
        corr = [
            (self.cols[z], m, (lw - length[z]) >> 1)
            for z, m in self.mu_list(v)
            if ldesc[z] >> s & 1
        ]
        out: dict[int, tuple] = {}
        empty = ()
        intern = self._polys.setdefault
        # P_{y,v} != 0 for every y <= v, so [e,w] = keys(cv) u s.keys(cv)
        ys = set(cv)
        ys.update([lm[y] for y in cv])
        for y in ys:
            sy = lm[y]
            if ldesc[y] >> s & 1:
                a = cv.get(sy, empty)
                b = cv.get(y, empty)
            else:
                a = cv.get(y, empty)
                b = cv.get(sy, empty)
            # p = a + q*b
            n = max(len(a), len(b) + 1)
            p = [0] * n
            for k, x in enumerate(a):
                p[k] = x
            for k, x in enumerate(b):
                p[k + 1] += x
            for cz, m, sh in corr:
                pz = cz.get(y)
                if pz:
                    if len(p) < len(pz) + sh:
                        p.extend([0] * (len(pz) + sh - len(p)))
                    for k, x in enumerate(pz):
                        p[k + sh] -= m * x
            t = _trim(p)
            if t:
                out[y] = intern(t, t)
        return out

    def kl(self, y: int, w: int) -> tuple:
        return self.column(w).get(y, ())

    def mu(self, y: int, w: int) -> int:
        d = self.u.length[w] - self.u.length[y]
        if d <= 0 or not d & 1:
            return 0
        p = self.kl(y, w)
        k = d >> 1
        return p[k] if len(p) > k else 0

    def stats(self) -> dict[str, int]:
        return {
            "columns": len(self.cols),
            "entries": sum(len(c) for c in self.cols.values()),
        }


class KLCache:
    """JSON-lines store of KL polynomials keyed by canonical words.

    The first line is a header ``{"format": 1, "type": "B3~"}``; every other
    line is ``{"y": word, "w": word, "P": {exp: coeff}}`` with P in q.
    """

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()
        self._seen: set[tuple[str, str]] = set()

    def load(self) -> list[tuple[str, str, LaurentPoly]]:
        if not os.path.exists(self.path):
            return []
        out = []
        with open(self.path, encoding="utf-8") as fh:
            header = fh.readline()
            if not header.strip():
                return []
            meta = json.loads(header)
            if meta.get("format") != CACHE_FORMAT or meta.get("type") != CACHE_TYPE:
                raise ValueError(f"cache header mismatch in {self.path}: {meta}")
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                key = (rec["y"], rec["w"])
                if key in self._seen:
                    continue
                self._seen.add(key)
                out.append((rec["y"], rec["w"], LaurentPoly.from_json(rec["P"])))
        return out

    def append(self, records: Iterable[tuple[str, str, LaurentPoly]]) -> int:
        with self._lock:
            fresh = [(y, w, p) for y, w, p in records if (y, w) not in self._seen]
            if not fresh:
                return 0
            new_file = not os.path.exists(self.path) or os.path.getsize(self.path) == 0
            with open(self.path, "a", encoding="utf-8") as fh:
                if new_file:
                    fh.write(json.dumps({"format": CACHE_FORMAT, "type": CACHE_TYPE}) + "\n")
                for y, w, p in fresh:
                    self._seen.add((y, w))
                    fh.write(json.dumps({"y": y, "w": w, "P": p.to_json()}) + "\n")
            return len(fresh)


# ---------------------------------------------------------------------------
# Hecke algebra on integer keys


class HeckeAlgebra:
    """T-basis and C-basis arithmetic over a shared universe and KL engine."""

    def __init__(self, engine: KLEngine | None = None):
        self.kl = engine if engine is not None else KLEngine()
        self.u = self.kl.u
        self._sigma: dict[int, int] = {}

    # keys -------------------------------------------------------------
    def key(self, w: WeylElement) -> int:
        eps, w0 = split_tau(w)
        return 2 * self.u.id_of(w0) + eps

    def element(self, key: int) -> WeylElement:
        w = self.u.elements[key >> 1]
        return TAU * w if key & 1 else w

    def key_length(self, key: int) -> int:
        return self.u.length[key >> 1]

    def sigma(self, i: int) -> int:
        """Id of tau * w_i * tau."""
        j = self._sigma.get(i)
        if j is None:
            j = self.u.id_of(TAU * self.u.elements[i] * TAU)
            self._sigma[i] = j
            self._sigma[j] = i
        return j

    def _lmul(self, s: int, i: int) -> int:
        j = self.u.lmul[s][i]
        if j < 0:
            self.u.extend(self.u.length[i] + 1)
            j = self.u.lmul[s][i]
        return j

    def _rmul(self, s: int, i: int) -> int:
        j = self.u.rmul[s][i]
        if j < 0:
            self.u.extend(self.u.length[i] + 1)
            j = self.u.rmul[s][i]
        return j

    # T-basis ------------------------------------------------------------
    def t_gen(self, h: Vec, s: int | str, side: str = "left") -> Vec:
        """Multiply by T_s (s in 0..3 or 't') on the given side."""
        out: Vec = {}
        if s == "t":
            for key, p in h.items():
                i, eps = key >> 1, key & 1
                nk = 2 * i + (1 - eps) if side == "left" else 2 * self.sigma(i) + (1 - eps)
                _acc(out, nk, p)
            return out
        s = int(s)
        for key, p in h.items():
            i, eps = key >> 1, key & 1
            if side == "left":
                g = SIGMA[s] if eps else s
                j = self._lmul(g, i)
                down = self.u.ldesc[i] >> g & 1
            else:
                j = self._rmul(s, i)
                down = self.u.rdesc[i] >> s & 1
            nk = 2 * j + eps
            if not down:
                _acc(out, nk, p)
            else:
                # T_s T_w = q T_{sw} + (q - 1) T_w when sw < w
                _acc(out, nk, _shift(p, 2))
                _acc(out, key, _shift(p, 2))
                _acc(out, key, p, -1)
        return out

    def t_word(self, h: Vec, word: str, side: str = "right") -> Vec:
        """h * T_{s1} ... T_{sk} (right) or T_{s1} ... T_{sk} * h (left)."""
        seq = word if side == "right" else reversed(word)
        for ch in seq:
            h = self.t_gen(h, ch if ch == "t" else int(ch), side)
        return h

    def t_inverse_gen(self, s: int | str) -> Vec:
        if s == "t":
            return {1: {0: 1}}
        s = int(s)
        k = 2 * self.u.lmul[s][0]
        # T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e
        return {k: {-2: 1}, 0: {-2: 1, 0: -1}}

    def t_mul(self, a: Vec, b: Vec) -> Vec:
        """Product in the T-basis: fold each T_y of b into a generator by generator."""
        out: Vec = {}
        # a T_{tau^eps w} = (a T_tau^eps) T_w
        bases = {0: a}
        caches: dict[int, dict[int, Vec]] = {0: {}, 1: {}}
        for key, p in b.items():
            eps = key & 1
            if eps not in bases:
                bases[eps] = self.t_gen(a, "t", "right")
            prod = self._times_t(bases[eps], key >> 1, caches[eps])
            for k2, c in prod.items():
                _acc(out, k2, _pmul(c, p))
        return out

    def _times_t(self, a: Vec, i: int, cache: dict[int, Vec]) -> Vec:
        """a * T_{w_i}, memoizing a * T_y along right-descent prefixes."""
        rdesc, rmul, length = self.u.rdesc, self.u.rmul, self.u.length
        chain = []
        j = i
        while j not in cache and length[j] > 0:
            s = (rdesc[j] & -rdesc[j]).bit_length() - 1
            chain.append((j, s))
            j = rmul[s][j]
        if j not in cache:
            cache[j] = a
        for j2, s in reversed(chain):
            cache[j2] = self.t_gen(cache[rmul[s][j2]], s, "right")
        return cache[i]

    # C-basis -------------------------------------------------------------
    def c_basis(self, key: int) -> Vec:
        i, eps = key >> 1, key & 1
        lw = self.u.length[i]
        col = self.kl.column(i)
        out: Vec = {}
        for y, p in col.items():
            out[2 * y + eps] = {2 * k - lw: c for k, c in enumerate(p) if c}
        return out

    def to_c_basis(self, h: Vec) -> Vec:
        """Triangular top-down conversion from the T-basis."""
        h = {k: dict(p) for k, p in h.items() if p}
        out: Vec = {}
        length = self.u.length
        while h:
            top = max(length[k >> 1] for k in h)
            keys = sorted(k for k in h if length[k >> 1] == top)
            for key in keys:
                p = h.pop(key, None)
                if not p:
                    continue
                coef = _shift(p, top)
                out[key] = coef
                for k2, c in self.c_basis(key).items():
                    if k2 == key:
                        continue
                    _acc(h, k2, _pmul(c, coef), -1)
        return out

    def to_t_basis(self, h: Vec) -> Vec:
        out: Vec = {}
        for key, p in h.items():
            for k2, c in self.c_basis(key).items():
                _acc(out, k2, _pmul(c, p))
        return {k: p for k, p in out.items() if p}

    def c_product(self, x: int, y: int) -> Vec:
        """C_x C_y expanded in the C-basis."""
        return self.to_c_basis(self.t_mul(self.c_basis(x), self.c_basis(y)))


def _shift(p: Poly, k: int) -> Poly:
    return {e + k: c for e, c in p.items()}


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _acc(out: Vec, key: int, p: Poly, sign: int = 1) -> None:
    cur = out.get(key)
    if cur is None:
        cur = out[key] = {}
    for e, c in p.items():
        n = cur.get(e, 0) + sign * c
        if n:
            cur[e] = n
        else:
            cur.pop(e, None)
    if not cur:
        del out[key]


# ---------------------------------------------------------------------------
# Public layer on WeylElements


class HeckeElement:
    """Finite sparse combination of T_w or C_w with LaurentPoly coefficients."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[WeylElement, LaurentPoly] | None = None):
        if basis not in ("T", "C"):
            raise ValueError(f"basis must be 'T' or 'C', got {basis!r}")
        self.basis = basis
        self.terms = {w: p for w, p in (terms or {}).items() if p}

    def __getitem__(self, w: WeylElement) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly())

    def coeff(self, w: WeylElement) -> LaurentPoly:
        return self[w]

    def support(self) -> set[WeylElement]:
        return set(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.basis != other.basis:
            raise ValueError("compare elements in the same basis")
        return self.terms == other.terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.basis != other.basis:
            raise ValueError("add elements in the same basis")
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out[w] + p if w in out else p
        return HeckeElement(self.basis, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.basis, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, p: LaurentPoly | int) -> "HeckeElement":
        if isinstance(p, int):
            p = LaurentPoly.constant(p)
        return HeckeElement(self.basis, {w: c * p for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = scale

    def to_json(self) -> dict:
        terms = sorted(
            ({"word": reduced_word(w), "poly": p.to_json()} for w, p in self.terms.items()),
            key=lambda t: (len(t["word"]), t["word"]),
        )
        return {"basis": self.basis, "terms": terms}

    @classmethod
    def from_json(cls, obj: Mapping) -> "HeckeElement":
        terms: dict[WeylElement, LaurentPoly] = {}
        for t in obj["terms"]:
            w = evaluate(t["word"])
            terms[w] = terms.get(w, LaurentPoly()) + LaurentPoly.from_json(t["poly"])
        return cls(obj["basis"], terms)

    def __repr__(self) -> str:
        body = " + ".join(
            f"({p})*{self.basis}[{reduced_word(w) or 'e'}]"
            for w, p in sorted(self.terms.items(), key=lambda kv: reduced_word(kv[0]))
        )
        return f"HeckeElement({body or '0'})"


_DEFAULT: HeckeAlgebra | None = None
_DEFAULT_LOCK = threading.Lock()


def default_algebra() -> HeckeAlgebra:
    global _DEFAULT
    with _DEFAULT_LOCK:
        if _DEFAULT is None:
            _DEFAULT = HeckeAlgebra(KLEngine(default_universe()))
        return _DEFAULT


def _alg(engine) -> HeckeAlgebra:
    if engine is None:
        return default_algebra()
    if isinstance(engine, HeckeAlgebra):
        return engine
    return HeckeAlgebra(engine)


def _to_vec(h: HeckeElement, alg: HeckeAlgebra) -> Vec:
    return {alg.key(w): dict(p.terms()) for w, p in h.terms.items()}


def _from_vec(basis: str, vec: Vec, alg: HeckeAlgebra) -> HeckeElement:
    return HeckeElement(
        basis, {alg.element(k): LaurentPoly._raw(dict(p)) for k, p in vec.items() if p}
    )


def t_basis(w: WeylElement) -> HeckeElement:
    return HeckeElement("T", {w: LaurentPoly.constant(1)})


def t_mul_gen(h: HeckeElement, r, side: str = "left", engine=None) -> HeckeElement:
    """T_r * h or h * T_r for a simple reflection r in 0..3, or r = 't' for tau."""
    if h.basis != "T":
        raise ValueError("t_mul_gen expects a T-basis element")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    alg = _alg(engine)
    return _from_vec("T", alg.t_gen(_to_vec(h, alg), r, side), alg)


def t_inverse_gen(r) -> HeckeElement:
    """T_r^{-1} = q^{-1} T_r + (q^{-1} - 1) T_e; T_tau^{-1} = T_tau."""
    if r == "t":
        return t_basis(TAU)
    g = evaluate(str(r))
    return HeckeElement("T", {g: LaurentPoly({-2: 1}), IDENTITY: LaurentPoly({-2: 1, 0: -1})})


def t_inverse(w: WeylElement, engine=None) -> HeckeElement:
    """T_w^{-1} as a T-basis element."""
    alg = _alg(engine)
    h: Vec = {0: {0: 1}}
    for ch in reversed(reduced_word(w)):
        h = _right_inverse_gen(alg, h, ch)
    return _from_vec("T", h, alg)


def _right_inverse_gen(alg: HeckeAlgebra, h: Vec, ch: str) -> Vec:
    if ch == "t":
        return alg.t_gen(h, "t", "right")
    out = {k: _shift(p, -2) for k, p in alg.t_gen(h, int(ch), "right").items()}
    for k, p in h.items():
        _acc(out, k, _shift(p, -2))
        _acc(out, k, p, -1)
    return out


def multiply(a: HeckeElement, b: HeckeElement, engine=None) -> HeckeElement:
    """Product of two elements, returned in the basis of ``a``."""
    alg = _alg(engine)
    va = _to_vec(a, alg) if a.basis == "T" else alg.to_t_basis(_to_vec(a, alg))
    vb = _to_vec(b, alg) if b.basis == "T" else alg.to_t_basis(_to_vec(b, alg))
    out = alg.t_mul(va, vb)
    if a.basis == "C":
        return _from_vec("C", alg.to_c_basis(out), alg)
    return _from_vec("T", out, alg)


def c_basis(w: WeylElement, engine=None) -> HeckeElement:
    """C_w expanded in the T-basis."""
    alg = _alg(engine)
    return _from_vec("T", alg.c_basis(alg.key(w)), alg)


def to_c_basis(h: HeckeElement, engine=None) -> HeckeElement:
    if h.basis == "C":
        return h
    alg = _alg(engine)
    return _from_vec("C", alg.to_c_basis(_to_vec(h, alg)), alg)


def to_t_basis(h: HeckeElement, engine=None) -> HeckeElement:
    if h.basis == "T":
        return h
    alg = _alg(engine)
    return _from_vec("T", alg.to_t_basis(_to_vec(h, alg)), alg)


def c_product(x: WeylElement, y: WeylElement, engine=None) -> dict[WeylElement, LaurentPoly]:
    """The structure constants z -> h_{x,y,z} of C_x C_y."""
    alg = _alg(engine)
    vec = alg.c_product(alg.key(x), alg.key(y))
    return {alg.element(k): LaurentPoly._raw(dict(p)) for k, p in vec.items() if p}


# KL polynomials -------------------------------------------------------------

_CACHE: KLCache | None = None
_CACHE_HITS: dict[tuple[str, str], LaurentPoly] = {}


def use_cache(path: str | None) -> KLCache | None:
    """Attach (or detach with None) the on-disk KL cache used by kl_polynomial."""
    global _CACHE
    _CACHE_HITS.clear()
    if path is None:
        _CACHE = None
        return None
    _CACHE = KLCache(path)
    for y, w, p in _CACHE.load():
        _CACHE_HITS[(y, w)] = p
    return _CACHE


def _coset_ids(y: WeylElement, w: WeylElement, alg: HeckeAlgebra):
    ey, y0 = split_tau(y)
    ew, w0 = split_tau(w)
    if ey != ew:
        return None
    return alg.u.id_of(y0), alg.u.id_of(w0)


def kl_polynomial(y: WeylElement, w: WeylElement, engine=None) -> LaurentPoly:
    """P_{y,w} as a polynomial in q (exponents count powers of q).

    For the twisted coset, P_{tau y, tau w} = P_{y,w}.
    """
    if _CACHE is not None and engine is None:
        key = (reduced_word(y), reduced_word(w))
        hit = _CACHE_HITS.get(key)
        if hit is not None:
            return hit
    alg = _alg(engine)
    ids = _coset_ids(y, w, alg)
    if ids is None:
        return LaurentPoly()
    p = alg.kl.kl(*ids)
    out = LaurentPoly._raw({k: c for k, c in enumerate(p) if c})
    if _CACHE is not None and engine is None:
        _persist_column(alg, ids[1], split_tau(w)[0])
    return out


def _persist_column(alg: HeckeAlgebra, wid: int, eps: int) -> None:
    prefix = "t" if eps else ""
    ww = prefix + alg.u.word(wid)
    if (ww, ww) in _CACHE_HITS:
        return
    recs = []
    for yid, p in alg.kl.column(wid).items():
        poly = LaurentPoly._raw({k: c for k, c in enumerate(p) if c})
        yw = prefix + alg.u.word(yid)
        _CACHE_HITS[(yw, ww)] = poly
        recs.append((yw, ww, poly))
    _CACHE.append(recs)


def mu(y: WeylElement, w: WeylElement, engine=None) -> int:
    """Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w} (zero unless y < w)."""
    alg = _alg(engine)
    ids = _coset_ids(y, w, alg)
    if ids is None:
        return 0
    return alg.kl.mu(*ids)


def mu_tilde(y: WeylElement, w: WeylElement, engine=None) -> int:
    """mu(y,w) if y <= w, mu(w,y) if w < y, and 0 for incomparable pairs."""
    if bruhat_leq(y, w):
        return mu(y, w, engine)
    if bruhat_leq(w, y):
        return mu(w, y, engine)
    return 0


def delta(z: WeylElement, engine=None) -> int:
    """deg_q P_{e,z}; raises ValueError when P_{e,z} = 0 (e.g. z in the tau-coset)."""
    p = kl_polynomial(IDENTITY, z, engine)
    if not p:
        raise ValueError("P_{e,z} vanishes")
    return p.degree()


# theta and the Bernstein elements ------------------------------------------


def translation(weight) -> WeylElement:
    """The translation x -> x + weight; dominant weights satisfy x1 >= x2 >= x3 >= 0."""
    weight = tuple(int(a) for a in weight)
    if len(weight) != 3:
        raise ValueError("weights are integer 3-vectors")
    return WeylElement((0, 1, 2), (1, 1, 1), weight)


def is_dominant(weight) -> bool:
    a, b, c = weight
    return a >= b >= c >= 0


def dominant_split(weight, extra=(0, 0, 0)) -> tuple[tuple, tuple]:
    """(y, z) dominant with weight = y - z; ``extra`` (dominant) is added to both."""
    x1, x2, x3 = (int(a) for a in weight)
    if not is_dominant(extra):
        raise ValueError("extra shift must be dominant")
    z3 = max(0, -x3)
    z2 = z3 + max(0, x3 - x2)
    z1 = z2 + max(0, x2 - x1)
    z = (z1 + extra[0], z2 + extra[1], z3 + extra[2])
    y = (x1 + z[0], x2 + z[1], x3 + z[2])
    return y, z


def theta(weight, extra=(0, 0, 0), engine=None) -> HeckeElement:
    """theta_x = T~_y (T~_z)^{-1} for a split x = y - z into dominant weights."""
    alg = _alg(engine)
    y, z = dominant_split(weight, extra)
    ty, tz = translation(y), translation(z)
    ky, kz = alg.key(ty), alg.key(tz)
    h: Vec = {ky: {alg.key_length(kz) - alg.key_length(ky): 1}}
    for ch in reversed(reduced_word(tz)):
        h = _right_inverse_gen(alg, h, ch)
    return _from_vec("T", h, alg)


# e_i +- e_j and +- e_i in coordinates
_SHORT = [tuple(s if k == i else 0 for k in range(3)) for i in range(3) for s in (1, -1)]
_LONG = [
    tuple((a if k == i else b if k == j else 0) for k in range(3))
    for i in range(3)
    for j in range(i + 1, 3)
    for a in (1, -1)
    for b in (1, -1)
]


def bernstein_S1(engine=None) -> HeckeElement:
    """S_{x1}: the sum of theta over the six weights of the standard representation."""
    out = HeckeElement("T")
    for wt in _SHORT:
        out = out + theta(wt, engine=engine)
    return out


def bernstein_S2(engine=None) -> HeckeElement:
    """S_{x2}: theta over the twelve weights +-e_i +- e_j plus 2 T~_e."""
    out = HeckeElement("T", {IDENTITY: LaurentPoly.constant(2)})
    for wt in _LONG:
        out = out + theta(wt, engine=engine)
    return out
