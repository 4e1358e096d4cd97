"""Multivariate polynomial and Laurent-polynomial arithmetic over Q.

Polynomials are immutable lists of (coefficient, exponent-vector) terms over a
fixed ring descriptor.  Exponents may be negative exactly when the ring is a
Laurent ring.  Monomial maps send each source variable to a Laurent monomial
of the target ring and are encoded by an integer matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .exactla import IntMat


class PolyError(ValueError):
    """Domain error raised by the polynomial layer."""


@dataclass(frozen=True)
class Ring:
    """Ordered variable list plus a Laurent flag.

    The variable order is fixed at construction and defines exponent-vector
    indexing everywhere downstream.
    """

    names: tuple[str, ...]
    laurent: bool = False

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise PolyError("variable names must be unique")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PolyError(f"unknown variable {name!r}") from None

    def laurent_ring(self) -> "Ring":
        return self if self.laurent else Ring(self.names, True)

    def polynomial_ring(self) -> "Ring":
        return Ring(self.names, False) if self.laurent else self

    def zero(self) -> "Poly":
        return Poly(self, ())

    def one(self) -> "Poly":
        return self.monomial((0,) * self.arity)

    def var(self, name: str) -> "Poly":
        exps = [0] * self.arity
        exps[self.index(name)] = 1
        return self.monomial(tuple(exps))

    def monomial(self, exponents: Sequence[int], coeff=1) -> "Poly":
        return Poly.from_terms(self, [(Fraction(coeff), tuple(exponents))])

    def poly(self, text: str) -> "Poly":
        return parse_poly(self, text)


class Term(NamedTuple):
    coeff: Fraction
    exponents: tuple[int, ...]


def _storage_key(exponents: tuple[int, ...]):
    # graded-reverse-lexicographic; storage order only, not a Groebner order
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


class Poly:
    """Normalized polynomial: sorted terms, no zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: tuple[Term, ...]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *args) -> None:
        raise AttributeError("Poly is immutable")

    @staticmethod
    def from_terms(ring: Ring, raw: Iterable[tuple[Fraction, tuple[int, ...]]]) -> "Poly":
        acc: dict[tuple[int, ...], Fraction] = {}
        for coeff, exps in raw:
            if len(exps) != ring.arity:
                raise PolyError("exponent vector has wrong arity")
            if not ring.laurent and any(e < 0 for e in exps):
                raise PolyError("negative exponent in non-Laurent ring")
            if coeff:
                acc[exps] = acc.get(exps, Fraction(0)) + coeff
        terms = tuple(
            Term(c, e)
            for e, c in sorted(acc.items(), key=lambda kv: _storage_key(kv[0]), reverse=True)
            if c
        )
        return Poly(ring, terms)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return (len(self.terms) == 1 and self.terms[0].coeff == 1
                and all(e == 0 for e in self.terms[0].exponents))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and all(e == 0 for e in self.terms[0].exponents))

    def is_homogeneous(self) -> bool:
        degs = {sum(t.exponents) for t in self.terms}
        return len(degs) <= 1

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(t.exponents) for t in self.terms)

    def support(self) -> set[int]:
        """Indices of variables occurring with nonzero exponent."""
        out: set[int] = set()
        for t in self.terms:
            out.update(i for i, e in enumerate(t.exponents) if e != 0)
        return out

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise PolyError("ring mismatch")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly.from_terms(self.ring, [(t.coeff, t.exponents) for t in self.terms]
                               + [(t.coeff, t.exponents) for t in other.terms])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly.from_terms(self.ring, [(t.coeff, t.exponents) for t in self.terms]
                               + [(-t.coeff, t.exponents) for t in other.terms])

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple(Term(-t.coeff, t.exponents) for t in self.terms))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        self._check(other)
        raw = []
        for c1, e1 in self.terms:
            for c2, e2 in other.terms:
                raw.append((c1 * c2, tuple(a + b for a, b in zip(e1, e2))))
        return Poly.from_terms(self.ring, raw)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, tuple(Term(c * t.coeff, t.exponents) for t in self.terms))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise PolyError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __repr__(self) -> str:
        return f"Poly({poly_to_string(self)!r})"

    def __str__(self) -> str:
        return poly_to_string(self)

    # -- ring changes -------------------------------------------------------

    def in_ring(self, target: Ring) -> "Poly":
        """Reinterpret in a ring with the same names, possibly reordered.

        Every variable actually occurring must exist in the target.
        """
        if target == self.ring:
            return self
        positions = []
        for i, name in enumerate(self.ring.names):
            positions.append(target.names.index(name) if name in target.names else None)
        raw = []
        for c, exps in self.terms:
            out = [0] * target.arity
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if positions[i] is None:
                    raise PolyError(f"variable {self.ring.names[i]!r} absent from target ring")
                out[positions[i]] = e
            raw.append((c, tuple(out)))
        return Poly.from_terms(target, raw)


@dataclass(frozen=True)
class MonomialMap:
    """Ring map sending source variable i to the target monomial with
    exponent vector given by row i of the matrix."""

    source: Ring
    target: Ring
    matrix: IntMat

    def __post_init__(self) -> None:
        if self.matrix.rows != self.source.arity or self.matrix.cols != self.target.arity:
            raise PolyError("monomial map matrix has wrong shape")

    def compose(self, then: "MonomialMap") -> "MonomialMap":
        """The map 'apply self, then apply then'; matrix is the product."""
        if self.target.names != then.source.names:
            raise PolyError("maps not composable")
        return MonomialMap(self.source, then.target, self.matrix.mul(then.matrix))


def apply_map(m: MonomialMap, f: Poly) -> Poly:
    """Image of f under the monomial map; lands in the Laurent target ring."""
    if f.ring.names != m.source.names or f.ring.laurent != m.source.laurent:
        raise PolyError("polynomial not in the map's source ring")
    target = m.target.laurent_ring()
    rows = m.matrix.entries
    raw = []
    for c, exps in f.terms:
        img = [0] * m.matrix.cols
        for i, e in enumerate(exps):
            if e:
                row = rows[i]
                for j in range(m.matrix.cols):
                    img[j] += e * row[j]
        raw.append((c, tuple(img)))
    return Poly.from_terms(target, raw)


def clear_denominators(f: Poly) -> Poly:
    """Divide out the greatest common monomial (Laurent) factor.

    The result lives in the non-Laurent version of f's ring, has all
    exponents nonnegative, and no variable divides every term.
    """
    target = f.ring.polynomial_ring()
    if not f.terms:
        return target.zero()
    arity = f.ring.arity
    mins = [min(t.exponents[i] for t in f.terms) for i in range(arity)]
    raw = [(c, tuple(e - m for e, m in zip(exps, mins))) for c, exps in f.terms]
    return Poly.from_terms(target, raw)


def substitute_ones(f: Poly, vars: Iterable) -> Poly:
    """Set the listed variables (names or indices) to 1."""
    idx = set()
    for v in vars:
        idx.add(f.ring.index(v) if isinstance(v, str) else int(v))
    raw = [(c, tuple(0 if i in idx else e for i, e in enumerate(exps)))
           for c, exps in f.terms]
    return Poly.from_terms(f.ring, raw)


# ---------------------------------------------------------------------------
# text format:  -3/2*x12^2*x345 + x13 - 1
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<caret>\^)|(?P<star>\*)|(?P<sign>[+-])|(?P<other>\S))"
)


def parse_poly(ring: Ring, text: str) -> Poly:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "other":
            raise PolyError(f"unexpected character {m.group()!r}")
        tokens.append((kind, m.group().strip()))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    raw: list[tuple[Fraction, tuple[int, ...]]] = []
    first = True
    while pos < len(tokens):
        sign = 1
        while peek()[0] == "sign":
            if tokens[pos][1] == "-":
                sign = -sign
            pos += 1
            first = False
        if pos >= len(tokens):
            raise PolyError("dangling sign")
        if first:
            first = False
        coeff = Fraction(sign)
        exps = [0] * ring.arity
        saw_factor = False
        expect_factor = True
        while expect_factor:
            kind, val = peek()
            if kind == "num":
                coeff *= Fraction(val)
                pos += 1
                saw_factor = True
            elif kind == "name":
                pos += 1
                e = 1
                if peek()[0] == "caret":
                    pos += 1
                    esign = 1
                    while peek()[0] == "sign":
                        if tokens[pos][1] == "-":
                            esign = -esign
                        pos += 1
                    kind2, val2 = peek()
                    if kind2 != "num" or "/" in val2:
                        raise PolyError("exponent must be an integer")
                    e = esign * int(val2)
                    pos += 1
                exps[ring.index(val)] += e
                saw_factor = True
            else:
                raise PolyError(f"expected coefficient or variable near token {val!r}")
            if peek()[0] == "star":
                pos += 1
                expect_factor = True
            else:
                expect_factor = False
        if not saw_factor:
            raise PolyError("empty term")
        raw.append((coeff, tuple(exps)))
    if not ring.laurent and any(e < 0 for _, ee in raw for e in ee):
        raise PolyError("negative exponent in non-Laurent ring")
    return Poly.from_terms(ring, raw)


def poly_to_string(f: Poly) -> str:
    if not f.terms:
        return "0"
    parts = []
    for k, (c, exps) in enumerate(f.terms):
        neg = c < 0
        c = abs(c)
        factors = []
        if c != 1:
            factors.append(str(c))
        for name, e in zip(f.ring.names, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        if not factors:
            factors.append(str(c))
        body = "*".join(factors)
        if k == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def ring_to_json(ring: Ring) -> dict:
    return {"vars": list(ring.names), "laurent": ring.laurent}


def ring_from_json(data: Mapping) -> Ring:
    return Ring(tuple(data["vars"]), bool(data.get("laurent", False)))
