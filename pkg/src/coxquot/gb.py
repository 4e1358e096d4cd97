"""Groebner-basis engine over the rationals.

Buchberger with Gebauer-Moller pair pruning and the normal selection
strategy (smallest lcm first).  Monomials are packed into single big
integers (16 bits per exponent) so that multiplication is integer addition
and divisibility is one masked subtraction; coefficients are arbitrary
precision integers over primitive (content-free) representatives, with a
tracked scalar so normal forms stay exact over Q.

On top of the engine: normal forms, elimination, three saturation
algorithms (iterated per-variable quotients, single extra variable, and a
divide-by-last-variable shortcut for homogeneous ideals, plus a
symmetry-aware variant), initial forms/ideals under min or max weight
conventions, and the tropical membership test.
"""

from __future__ import annotations

import heapq
from bisect import insort
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exactla import IntMat, hnf
from .poly import Poly, Ring, Term, clear_denominators

_FIELD_BITS = 16
_MAX_EXP = (1 << 15) - 1


class GBError(ValueError):
    """Domain error raised by the Groebner layer."""


# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """Total order on monomials: lex, grevlex, or weight-then-tiebreak.

    ``convention`` states whether weight-based leading terms take the
    minimal or maximal weight degree; it is meaningful only for weight
    orders.  Rational weights are scaled to a primitive integer vector
    (the order is scale invariant).
    """

    kind: str  # 'lex' | 'grevlex' | 'weight'
    weight: tuple[int, ...] | None = None
    tiebreak: str = "grevlex"
    convention: str = "max"

    @staticmethod
    def lex() -> "TermOrder":
        return TermOrder("lex")

    @staticmethod
    def grevlex() -> "TermOrder":
        return TermOrder("grevlex")

    @staticmethod
    def weight_order(w: Sequence, convention: str = "min",
                     tiebreak: str = "grevlex") -> "TermOrder":
        if convention not in ("min", "max"):
            raise GBError("convention must be 'min' or 'max'")
        if tiebreak not in ("lex", "grevlex"):
            raise GBError("tiebreak must be 'lex' or 'grevlex'")
        fracs = [Fraction(x) for x in w]
        if not fracs:
            scaled: tuple[int, ...] = ()
        else:
            denom_lcm = 1
            for f in fracs:
                denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
            ints = [int(f * denom_lcm) for f in fracs]
            g = 0
            for v in ints:
                g = gcd(g, v)
            scaled = tuple(v // g for v in ints) if g else tuple(ints)
        return TermOrder("weight", scaled, tiebreak, convention)

    def is_global(self) -> bool:
        """True when every variable exceeds 1, so Buchberger terminates
        on arbitrary input."""
        if self.kind in ("lex", "grevlex"):
            return True
        assert self.weight is not None
        if self.convention == "max":
            return all(w >= 0 for w in self.weight)
        return all(w <= 0 for w in self.weight)


class _OrderImpl:
    """Key machinery for one (arity, order) pair.

    Keys are additive: key(u + v) == kadd(key(u), key(v)), which lets the
    engine track them through monomial multiplication without unpacking.
    """

    def __init__(self, arity: int, order: TermOrder):
        self.arity = arity
        self.order = order
        shift = _FIELD_BITS * arity
        if order.kind == "weight":
            if order.weight is None or len(order.weight) != arity:
                raise GBError("weight vector has wrong dimension")
            sgn = 1 if order.convention == "max" else -1
            w = order.weight
            tie = self._plain_key_fn(order.tiebreak, arity, shift)
            self.key = lambda u: (sgn * sum(a * b for a, b in zip(w, u)), tie(u))
            self.kadd = lambda a, b: (a[0] + b[0], a[1] + b[1])
            self.ksub = lambda a, b: (a[0] - b[0], a[1] - b[1])
            self.kneg = lambda a: (-a[0], -a[1])
        else:
            self.key = self._plain_key_fn(order.kind, arity, shift)
            self.kadd = lambda a, b: a + b
            self.ksub = lambda a, b: a - b
            self.kneg = lambda a: -a

    @staticmethod
    def _plain_key_fn(kind: str, arity: int, shift: int):
        if kind == "grevlex":
            def key(u, _shift=shift):
                packed = 0
                for i, e in enumerate(u):
                    packed |= e << (_FIELD_BITS * i)
                return (sum(u) << _shift) - packed
        elif kind == "lex":
            def key(u, _arity=arity):
                packed = 0
                for i, e in enumerate(u):
                    packed |= e << (_FIELD_BITS * (_arity - 1 - i))
                return packed
        else:
            raise GBError(f"unknown order kind {kind!r}")
        return key


def _pack(u: Sequence[int]) -> int:
    packed = 0
    for i, e in enumerate(u):
        if e < 0 or e > _MAX_EXP:
            raise GBError("exponent out of engine range")
        packed |= e << (_FIELD_BITS * i)
    return packed


def _unpack(packed: int, arity: int) -> tuple[int, ...]:
    return tuple((packed >> (_FIELD_BITS * i)) & 0xFFFF for i in range(arity))


def _top_mask(arity: int) -> int:
    mask = 0
    for i in range(arity):
        mask |= 1 << (_FIELD_BITS * i + 15)
    return mask


# ---------------------------------------------------------------------------
# engine polynomials: lists of (key, packed, int_coeff), sorted by key desc
# ---------------------------------------------------------------------------

class _BElem:
    __slots__ = ("terms", "lt_key", "lt_packed", "lc", "tail")

    def __init__(self, terms):
        self.terms = terms
        self.lt_key, self.lt_packed, self.lc = terms[0]
        self.tail = terms[1:]


def _poly_to_engine(f: Poly, oi: _OrderImpl) -> list:
    denom = 1
    for t in f.terms:
        d = t.coeff.denominator
        denom = denom * d // gcd(denom, d)
    terms = []
    for t in f.terms:
        c = int(t.coeff * denom)
        terms.append((oi.key(t.exponents), _pack(t.exponents), c))
    terms.sort(key=lambda x: x[0], reverse=True)
    return _strip_content(terms)


def _strip_content(terms: list) -> list:
    if not terms:
        return terms
    g = 0
    for _, _, c in terms:
        g = gcd(g, c)
        if g == 1:
            break
    if terms[0][2] < 0:
        g = -g
    if g != 1:
        terms = [(k, p, c // g) for k, p, c in terms]
    return terms


def _engine_to_poly(terms: list, ring: Ring, oi: _OrderImpl, denom: int = 1,
                    monic: bool = False) -> Poly:
    if not terms:
        return ring.zero()
    if monic:
        lead = terms[0][2]
        raw = [(Fraction(c, lead), _unpack(p, oi.arity)) for _, p, c in terms]
    else:
        raw = [(Fraction(c, denom), _unpack(p, oi.arity)) for _, p, c in terms]
    return Poly.from_terms(ring, raw)


class _Engine:
    def __init__(self, arity: int, order: TermOrder):
        self.oi = _OrderImpl(arity, order)
        self.arity = arity
        self.top = _top_mask(arity)
        self.basis: list[_BElem] = []
        self.scan: list = []  # (lt_key, idx) sorted ascending

    def add_reducer(self, elem: _BElem) -> int:
        idx = len(self.basis)
        self.basis.append(elem)
        insort(self.scan, (elem.lt_key, idx))
        return idx

    def divides(self, a_packed: int, b_packed: int) -> bool:
        return ((b_packed | self.top) - a_packed) & self.top == self.top

    def lcm(self, a_packed: int, b_packed: int) -> tuple:
        ua = _unpack(a_packed, self.arity)
        ub = _unpack(b_packed, self.arity)
        m = tuple(max(x, y) for x, y in zip(ua, ub))
        return self.oi.key(m), _pack(m)

    def find_reducer(self, packed: int, key) -> _BElem | None:
        top = self.top
        basis = self.basis
        probe = (packed | top)
        for lt_key, idx in self.scan:
            if lt_key > key:
                return None
            g = basis[idx]
            if (probe - g.lt_packed) & top == top:
                return g
        return None

    def reduce_full(self, terms: Iterable[tuple], out_monic_scale: bool = False):
        """Full normal form against the current basis.

        Input terms need not be sorted or combined.  Returns (out, mult)
        where the true remainder is out / mult; out is sorted descending
        and not content-stripped.
        """
        oi = self.oi
        kneg = oi.kneg
        ksub = oi.ksub
        kadd = oi.kadd
        cur: dict[int, int] = {}
        heap: list = []
        keyof: dict[int, object] = {}
        for k, p, c in terms:
            if p in cur:
                cur[p] += c
            else:
                cur[p] = c
                keyof[p] = k
                heapq.heappush(heap, (kneg(k), p))
        out = []
        mult = 1
        while heap:
            nk, p = heapq.heappop(heap)
            c = cur.get(p, 0)
            if not c:
                cur.pop(p, None)
                continue
            k = kneg(nk)
            g = self.find_reducer(p, k)
            if g is None:
                out.append((k, p, c))
                del cur[p]
                continue
            del cur[p]
            lcg = g.lc
            if c % lcg:
                gg = gcd(c, lcg)
                s = lcg // gg
                if s < 0:
                    s = -s
                mult *= s
                for p2 in cur:
                    cur[p2] *= s
                if out:
                    out = [(k2, p2, c2 * s) for k2, p2, c2 in out]
                c *= s
            q = c // lcg
            dp = p - g.lt_packed
            dk = ksub(k, g.lt_key)
            for kt, pt, ct in g.tail:
                p2 = pt + dp
                delta = -q * ct
                old = cur.get(p2)
                if old is None:
                    cur[p2] = delta
                    heapq.heappush(heap, (kneg(kadd(kt, dk)), p2))
                else:
                    new = old + delta
                    if new:
                        cur[p2] = new
                    else:
                        del cur[p2]
        return out, mult

    def spoly_terms(self, gi: _BElem, gj: _BElem, lcm_packed: int, lcm_key) -> list:
        oi = self.oi
        di = lcm_packed - gi.lt_packed
        dki = oi.ksub(lcm_key, gi.lt_key)
        dj = lcm_packed - gj.lt_packed
        dkj = oi.ksub(lcm_key, gj.lt_key)
        g = gcd(gi.lc, gj.lc)
        a = gj.lc // g
        b = gi.lc // g
        terms = [(oi.kadd(k, dki), p + di, a * c) for k, p, c in gi.tail]
        terms += [(oi.kadd(k, dkj), p + dj, -b * c) for k, p, c in gj.tail]
        return terms

    # -- Buchberger ---------------------------------------------------------

    def buchberger(self, gens: list[list]) -> list[list]:
        pairs: list = []  # heap of (lcm_key, counter, i, j, lcm_packed)
        counter = 0

        def update(h_idx: int) -> None:
            nonlocal pairs, counter
            h = self.basis[h_idx]
            older = list(range(h_idx))
            lcms = {}
            coprime = {}
            for g_idx in older:
                g = self.basis[g_idx]
                lk, lp = self.lcm(g.lt_packed, h.lt_packed)
                lcms[g_idx] = (lk, lp)
                coprime[g_idx] = (g.lt_packed + h.lt_packed) == lp
            # Gebauer-Moller M/F criteria over the new pairs
            kept: list[int] = []
            remaining = list(older)
            while remaining:
                g_idx = remaining.pop(0)
                lp = lcms[g_idx][1]
                if coprime[g_idx]:
                    kept.append(g_idx)
                    continue
                dominated = any(self.divides(lcms[g2][1], lp) for g2 in remaining)
                if not dominated:
                    dominated = any(self.divides(lcms[g2][1], lp) for g2 in kept)
                if not dominated:
                    kept.append(g_idx)
            new_pairs = [g_idx for g_idx in kept if not coprime[g_idx]]
            # chain (B) criterion on the old pair queue
            if pairs:
                ht = h.lt_packed
                filtered = []
                for entry in pairs:
                    _, _, i, j, lp = entry
                    if self.divides(ht, lp):
                        li = self.lcm(self.basis[i].lt_packed, ht)[1]
                        lj = self.lcm(self.basis[j].lt_packed, ht)[1]
                        if li != lp and lj != lp:
                            continue
                    filtered.append(entry)
                if len(filtered) != len(pairs):
                    pairs = filtered
                    heapq.heapify(pairs)
            for g_idx in new_pairs:
                lk, lp = lcms[g_idx]
                heapq.heappush(pairs, (lk, counter, g_idx, h_idx, lp))
                counter += 1

        for g in gens:
            if not g:
                continue
            red, _ = self.reduce_full(list(g))
            if red:
                idx = self.add_reducer(_BElem(_strip_content(red)))
                update(idx)
        while pairs:
            _, _, i, j, lp = heapq.heappop(pairs)
            lk = self.oi.key(_unpack(lp, self.arity))
            s = self.spoly_terms(self.basis[i], self.basis[j], lp, lk)
            red, _ = self.reduce_full(s)
            if red:
                idx = self.add_reducer(_BElem(_strip_content(red)))
                update(idx)
        return self._reduced_basis()

    def _reduced_basis(self) -> list[list]:
        order = sorted(range(len(self.basis)), key=lambda i: (self.basis[i].lt_key, i))
        kept: list[int] = []
        for i in order:
            lt = self.basis[i].lt_packed
            if any(self.divides(self.basis[j].lt_packed, lt) for j in kept):
                continue
            kept.append(i)
        elems = [self.basis[i].terms for i in kept]
        changed = True
        while changed:
            changed = False
            for pos in range(len(elems)):
                sub = _Engine(self.arity, self.oi.order)
                sub.oi = self.oi
                for p2, terms in enumerate(elems):
                    if p2 != pos:
                        sub.add_reducer(_BElem(terms))
                red, _ = sub.reduce_full(list(elems[pos]))
                red = _strip_content(red)
                if red != elems[pos]:
                    elems[pos] = red
                    changed = True
        elems.sort(key=lambda t: t[0][0])
        return elems


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, sorted by leading term."""

    order: TermOrder
    elements: tuple[Poly, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass
class Ideal:
    ring: Ring
    gens: tuple[Poly, ...]
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __init__(self, ring: Ring, gens: Iterable[Poly]):
        self.ring = ring
        self.gens = tuple(gens)
        self.cache = {}
        for g in self.gens:
            if g.ring != ring:
                raise GBError("generator not in the ideal's ring")

    def groebner(self, order: TermOrder | None = None) -> GroebnerBasis:
        return buchberger(self, order or TermOrder.grevlex())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self.gens == other.gens)


def _canonical_gen_sort(gens: Iterable[Poly]) -> list[Poly]:
    def key(p: Poly):
        return tuple((t.exponents, t.coeff.numerator, t.coeff.denominator) for t in p.terms)
    uniq = {key(g): g for g in gens if not g.is_zero()}
    return [uniq[k] for k in sorted(uniq)]


def buchberger(ideal: Ideal, order: TermOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal; deterministic and cached."""
    if ideal.ring.laurent:
        raise GBError("Buchberger requires a polynomial (non-Laurent) ring; "
                      "clear denominators first")
    cached = ideal.cache.get(order)
    if cached is not None:
        return cached
    gens = _canonical_gen_sort(ideal.gens)
    if not order.is_global():
        if not all(g.is_homogeneous() for g in gens):
            raise GBError("non-global weight order requires homogeneous generators")
    eng = _Engine(ideal.ring.arity, order)
    oi = eng.oi
    raw = eng.buchberger([_poly_to_engine(g, oi) for g in gens])
    elements = tuple(_engine_to_poly(t, ideal.ring, oi, monic=True) for t in raw)
    result = GroebnerBasis(order, elements)
    ideal.cache[order] = result
    return result


def normal_form(f: Poly, basis: GroebnerBasis) -> Poly:
    """Remainder of f modulo the basis; zero iff f is in the ideal."""
    if not basis.elements:
        return f
    ring = basis.elements[0].ring
    if f.ring != ring:
        raise GBError("polynomial and basis live in different rings")
    eng = _Engine(ring.arity, basis.order)
    for g in basis.elements:
        eng.add_reducer(_BElem(_poly_to_engine(g, eng.oi)))
    denom = 1
    for t in f.terms:
        d = t.coeff.denominator
        denom = denom * d // gcd(denom, d)
    terms = [(eng.oi.key(t.exponents), _pack(t.exponents), int(t.coeff * denom))
             for t in f.terms]
    out, mult = eng.reduce_full(terms)
    return _engine_to_poly(out, ring, eng.oi, denom=denom * mult)


def member(f: Poly, ideal: Ideal, order: TermOrder | None = None) -> bool:
    return normal_form(f, buchberger(ideal, order or TermOrder.grevlex())).is_zero()


def is_unit_ideal(ideal: Ideal) -> bool:
    gb = buchberger(ideal, TermOrder.grevlex())
    return any(g.is_constant() and not g.is_zero() for g in gb.elements)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """Ideal-level equality via mutual generator membership."""
    if a.ring != b.ring:
        raise GBError("ideals live in different rings")
    gb_a = buchberger(a, TermOrder.grevlex())
    gb_b = buchberger(b, TermOrder.grevlex())
    return (all(normal_form(g, gb_b).is_zero() for g in a.gens)
            and all(normal_form(g, gb_a).is_zero() for g in b.gens))


# ---------------------------------------------------------------------------
# elimination and saturation
# ---------------------------------------------------------------------------

def eliminate(ideal: Ideal, keep: Iterable) -> Ideal:
    """Intersection with the subring on the kept variables."""
    ring = ideal.ring
    keep_idx = {ring.index(v) if isinstance(v, str) else int(v) for v in keep}
    w = tuple(0 if i in keep_idx else 1 for i in range(ring.arity))
    order = TermOrder.weight_order(w, convention="max", tiebreak="grevlex")
    gb = buchberger(ideal, order)
    kept = [g for g in gb.elements if g.support() <= keep_idx]
    return Ideal(ring, kept)


def _restrict(f: Poly, target: Ring) -> Poly:
    return f.in_ring(target)


def _saturate_var_elim(ideal: Ideal, var_idx: int) -> Ideal:
    """(I : x^inf) via the extra-variable trick <I, t*x - 1> int k[x]."""
    ring = ideal.ring
    tname = "t_sat"
    while tname in ring.names:
        tname += "_"
    big = Ring(ring.names + (tname,), False)
    lift = [g.in_ring(big) for g in ideal.gens]
    tx = [0] * big.arity
    tx[var_idx] = 1
    tx[-1] = 1
    rel = Poly.from_terms(big, [(Fraction(1), tuple(tx)), (Fraction(-1), (0,) * big.arity)])
    j = Ideal(big, lift + [rel])
    elim = eliminate(j, range(ring.arity))
    return Ideal(ring, [_restrict(g, ring) for g in elim.gens])


def _saturate_monomial_rabinowitsch(ideal: Ideal, var_idxs: Sequence[int]) -> Ideal:
    ring = ideal.ring
    tname = "t_sat"
    while tname in ring.names:
        tname += "_"
    big = Ring(ring.names + (tname,), False)
    lift = [g.in_ring(big) for g in ideal.gens]
    tm = [0] * big.arity
    for i in var_idxs:
        tm[i] = 1
    tm[-1] = 1
    rel = Poly.from_terms(big, [(Fraction(1), tuple(tm)), (Fraction(-1), (0,) * big.arity)])
    j = Ideal(big, lift + [rel])
    elim = eliminate(j, range(ring.arity))
    return Ideal(ring, [_restrict(g, ring) for g in elim.gens])


def _permute_poly(f: Poly, perm: Sequence[int], target: Ring) -> Poly:
    # perm[i] = position in target of source variable i
    raw = []
    for c, exps in f.terms:
        out = [0] * len(exps)
        for i, e in enumerate(exps):
            out[perm[i]] = e
        raw.append((c, tuple(out)))
    return Poly.from_terms(target, raw)


def _saturate_var_homog(ideal: Ideal, var_idx: int) -> Ideal:
    """(I : x^inf) for standard-homogeneous I: compute a grevlex basis with
    x last and divide each element by its x power (Bayer's trick)."""
    ring = ideal.ring
    n = ring.arity
    src_to_perm = [0] * n
    pos = 0
    for i in range(n):
        if i != var_idx:
            src_to_perm[i] = pos
            pos += 1
    src_to_perm[var_idx] = n - 1
    perm_names = tuple(ring.names[i] for i in sorted(range(n), key=lambda i: src_to_perm[i]))
    perm_ring = Ring(perm_names, False)
    perm_gens = [_permute_poly(g, src_to_perm, perm_ring) for g in ideal.gens]
    gb = buchberger(Ideal(perm_ring, perm_gens), TermOrder.grevlex())
    inv = sorted(range(n), key=lambda i: src_to_perm[i])
    out = []
    for g in gb.elements:
        low = min(t.exponents[n - 1] for t in g.terms)
        raw = []
        for c, exps in g.terms:
            e = list(exps)
            e[n - 1] -= low
            raw.append((c, tuple(e)))
        shifted = Poly.from_terms(perm_ring, raw)
        out.append(_permute_poly(shifted, inv, ring))
    return Ideal(ring, out)


def _symmetrize(gens: Iterable[Poly], perms: Sequence[Sequence[int]], ring: Ring) -> list[Poly]:
    seen: dict = {}
    for g in gens:
        for perm in perms:
            img = _permute_poly(g, perm, ring)
            # sign-normalize so g and -g collapse
            if img.terms and img.terms[0].coeff < 0:
                img = -img
            seen[img.terms] = img
    return _canonical_gen_sort(seen.values())


def _saturate_symmetric(ideal: Ideal, var_idxs: Sequence[int],
                        symmetries: Sequence[Sequence[int]]) -> Ideal:
    """Saturation by a product of variables for an ideal invariant under a
    variable-permutation group.

    Only one representative variable per group orbit is saturated; new
    generators are closed up under the group.  Repeats until every
    representative's saturation is trivial, which by equivariance makes the
    ideal saturated with respect to every variable in the orbit.
    """
    ring = ideal.ring
    orbits: dict[int, int] = {}
    for v in var_idxs:
        root = min(perm[v] for perm in symmetries) if symmetries else v
        orbits.setdefault(root, v)
    reps = sorted(orbits.values())
    gens = _symmetrize(ideal.gens, symmetries, ring)
    changed = True
    while changed:
        changed = False
        for rep in reps:
            cur = Ideal(ring, gens)
            sat = _saturate_var_homog(cur, rep)
            gbk = buchberger(cur, TermOrder.grevlex())
            new = [g for g in sat.gens if not normal_form(g, gbk).is_zero()]
            if new:
                gens = _symmetrize(list(gens) + new, symmetries, ring)
                changed = True
    return Ideal(ring, gens)


def saturate(ideal: Ideal, monomial: Poly, algorithm: str = "auto",
             symmetries: Sequence[Sequence[int]] | None = None) -> Ideal:
    """The saturation (I : m^infinity) for a monomial m.

    Algorithms: 'iterated' (per-variable extra-variable quotients, run to a
    fixpoint), 'rabinowitsch' (single extra variable for the full monomial),
    'homogeneous' (per-variable grevlex division, standard-homogeneous input
    only), 'symmetric' (homogeneous + ideal invariant under the given
    variable permutations), or 'auto'.
    """
    ring = ideal.ring
    if monomial.ring != ring or not monomial.is_monomial():
        raise GBError("saturation needs a monomial in the ideal's ring")
    var_idxs = sorted(monomial.support())
    if not var_idxs:
        return Ideal(ring, ideal.gens)
    homog = all(g.is_homogeneous() for g in ideal.gens)
    if algorithm == "auto":
        if symmetries and homog:
            algorithm = "symmetric"
        elif homog:
            algorithm = "homogeneous"
        else:
            algorithm = "iterated"
    if algorithm == "symmetric":
        if not homog:
            raise GBError("symmetric saturation requires homogeneous generators")
        if not symmetries:
            raise GBError("symmetric saturation requires the symmetry list")
        return _saturate_symmetric(ideal, var_idxs, symmetries)
    if algorithm == "homogeneous":
        if not homog:
            raise GBError("homogeneous saturation requires homogeneous generators")
        cur = ideal
        for v in var_idxs:
            cur = _saturate_var_homog(cur, v)
        return cur
    if algorithm == "rabinowitsch":
        return _saturate_monomial_rabinowitsch(ideal, var_idxs)
    if algorithm != "iterated":
        raise GBError(f"unknown saturation algorithm {algorithm!r}")
    cur = ideal
    while True:
        start_gb = buchberger(Ideal(ring, _canonical_gen_sort(cur.gens)), TermOrder.grevlex())
        for v in var_idxs:
            cur = _saturate_var_elim(cur, v)
        end_gb = buchberger(Ideal(ring, _canonical_gen_sort(cur.gens)), TermOrder.grevlex())
        if start_gb.elements == end_gb.elements:
            break
    return cur


# ---------------------------------------------------------------------------
# initial forms, initial ideals, tropical membership
# ---------------------------------------------------------------------------

def initial_form(f: Poly, w: Sequence, convention: str = "min") -> Poly:
    """Sum of the terms of f whose weight degree is extremal."""
    if convention not in ("min", "max"):
        raise GBError("convention must be 'min' or 'max'")
    if f.is_zero():
        return f
    ws = [Fraction(x) for x in w]
    if len(ws) != f.ring.arity:
        raise GBError("weight vector has wrong dimension")
    degs = [sum(a * b for a, b in zip(ws, t.exponents)) for t in f.terms]
    best = min(degs) if convention == "min" else max(degs)
    raw = [(t.coeff, t.exponents) for t, d in zip(f.terms, degs) if d == best]
    return Poly.from_terms(f.ring, raw)


def _homogenize(f: Poly, big: Ring) -> Poly:
    d = f.total_degree()
    raw = [(c, exps + (d - sum(exps),)) for c, exps in f.terms]
    return Poly.from_terms(big, raw)


def initial_ideal(ideal: Ideal, w: Sequence, convention: str = "min") -> Ideal:
    """Ideal of initial forms, computed from a weight-compatible basis.

    Inhomogeneous input is homogenized first (with weight zero on the new
    variable) so the weight order terminates; the result is dehomogenized.
    """
    ring = ideal.ring
    if ring.laurent:
        raise GBError("initial ideals live in polynomial rings")
    ws = [Fraction(x) for x in w]
    if len(ws) != ring.arity:
        raise GBError("weight vector has wrong dimension")
    gens = [g for g in ideal.gens if not g.is_zero()]
    if not gens:
        return Ideal(ring, ())
    if all(g.is_homogeneous() for g in gens):
        order = TermOrder.weight_order(ws, convention=convention, tiebreak="grevlex")
        gb = buchberger(Ideal(ring, gens), order)
        return Ideal(ring, [initial_form(g, ws, convention) for g in gb.elements])
    tname = "t_hom"
    while tname in ring.names:
        tname += "_"
    big = Ring(ring.names + (tname,), False)
    base = buchberger(Ideal(ring, gens), TermOrder.grevlex())
    hgens = [_homogenize(g, big) for g in base.elements]
    order = TermOrder.weight_order(list(ws) + [0], convention=convention, tiebreak="grevlex")
    gb = buchberger(Ideal(big, hgens), order)
    out = []
    for g in gb.elements:
        inw = initial_form(g, list(ws) + [0], convention)
        dehom = Poly.from_terms(ring, [(c, exps[:-1]) for c, exps in inw.terms])
        out.append(dehom)
    return Ideal(ring, out)


def trop_member(ideal: Ideal, w: Sequence) -> bool:
    """Tropical membership for an ideal of a torus (Laurent ring).

    True iff the weight-w initial ideal contains no monomial: clear
    denominators, form the initial ideal in the polynomial ring (min
    convention), and saturate by the product of all variables.
    """
    ring = ideal.ring
    if not ring.laurent:
        raise GBError("tropical membership expects a Laurent ideal")
    poly_ring = ring.polynomial_ring()
    cleared = [clear_denominators(g) for g in ideal.gens if not g.is_zero()]
    j = Ideal(poly_ring, cleared)
    jin = initial_ideal(j, w, convention="min")
    allvars = poly_ring.monomial((1,) * poly_ring.arity)
    sat = saturate(jin, allvars)
    return not is_unit_ideal(sat)


# ---------------------------------------------------------------------------
# Laurent-ideal helpers and toric ideals
# ---------------------------------------------------------------------------

def laurent_contract(ideal: Ideal) -> Ideal:
    """The contraction I int k[x] of a Laurent ideal, as a polynomial ideal:
    clear denominators and saturate by the product of all variables."""
    ring = ideal.ring
    if not ring.laurent:
        raise GBError("laurent_contract expects a Laurent ring")
    poly_ring = ring.polynomial_ring()
    cleared = [clear_denominators(g) for g in ideal.gens if not g.is_zero()]
    j = Ideal(poly_ring, cleared)
    allvars = poly_ring.monomial((1,) * poly_ring.arity)
    return saturate(j, allvars)


def laurent_member(f: Poly, ideal: Ideal) -> bool:
    contracted = laurent_contract(ideal)
    g = clear_denominators(f)
    return member(g, contracted)


def laurent_ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise GBError("ideals live in different rings")
    return ideal_equal(laurent_contract(a), laurent_contract(b))


def _kernel_rows(a: IntMat) -> list[tuple[int, ...]]:
    h, t = hnf(a.transpose())
    r = sum(1 for row in h.entries if any(x != 0 for x in row))
    return [t.entries[i] for i in range(r, a.cols)]


def toric_ideal(a: IntMat, ring: Ring) -> Ideal:
    """The toric ideal of the matrix: binomials x^u - x^v over Au == Av.

    Computed as the saturation of a lattice-basis binomial ideal by the
    product of all variables.
    """
    if ring.arity != a.cols:
        raise GBError("ring arity must match the matrix columns")
    raws = []
    for row in _kernel_rows(a):
        plus = tuple(max(e, 0) for e in row)
        minus = tuple(max(-e, 0) for e in row)
        raws.append(Poly.from_terms(ring, [(Fraction(1), plus), (Fraction(-1), minus)]))
    base = Ideal(ring, raws)
    allvars = ring.monomial((1,) * ring.arity)
    return saturate(base, allvars)
