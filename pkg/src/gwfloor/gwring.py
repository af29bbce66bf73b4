"""Exact arithmetic in a generic multiquadratic Grothendieck-Witt ring.

Elements are integer combinations of square-class symbols <a> where
a = +-q * d_{i1} * ... * d_{ik} for a square-free positive integer q and
formal parameters d_1, ..., d_s.  The canonical form keeps every symbol
sign-positive except the single distinguished <-1>, obtained by the
hyperbolic rewrite <-m> = <1> + <-1> - <m>.  Equality of expressions
produced by the counting formulas is decided modulo the two-shift
relation family 2<m> = 2<2m>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping


class ResidualNotInSpan(Exception):
    """A GW element does not fit the h / beta^{(l)} / <1> table format."""


def _squarefree(q: int) -> int:
    assert q >= 1
    out = 1
    p = 2
    while p * p <= q:
        e = 0
        while q % p == 0:
            q //= p
            e += 1
        if e % 2 == 1:
            out *= p
        p += 1 if p == 2 else 2
    return out * q


@dataclass(frozen=True, order=True)
class GwMonomial:
    """Square-class symbol <sign * int_part * prod d_i>."""

    int_part: int
    d_subset: tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        assert self.sign in (1, -1)
        assert self.int_part >= 1 and _squarefree(self.int_part) == self.int_part
        assert tuple(sorted(set(self.d_subset))) == self.d_subset

    @staticmethod
    def of(a: int, d_subset: Iterable[int] = ()) -> "GwMonomial":
        """Build <a * prod d_i>, reducing a modulo squares."""
        assert a != 0
        sign = 1 if a > 0 else -1
        return GwMonomial(_squarefree(abs(a)), tuple(sorted(set(d_subset))), sign)

    def __mul__(self, other: "GwMonomial") -> "GwMonomial":
        g = math.gcd(self.int_part, other.int_part)
        q = (self.int_part // g) * (other.int_part // g)
        subset = frozenset(self.d_subset) ^ frozenset(other.d_subset)
        return GwMonomial(q, tuple(sorted(subset)), self.sign * other.sign)

    def key(self) -> str:
        """Stable serialization "+q*d{i}d{j}..." with ascending indices."""
        head = ("+" if self.sign > 0 else "-") + str(self.int_part)
        if not self.d_subset:
            return head
        return head + "*" + "".join(f"d{i}" for i in self.d_subset)

    def __str__(self):
        body = str(self.sign * self.int_part)
        tail = "".join(f"d{i}" for i in self.d_subset)
        if tail and self.int_part == 1:
            body = "-" + tail if self.sign < 0 else tail
            return f"<{body}>"
        return f"<{body}{tail}>"


_ONE = GwMonomial(1, ())
_MINUS_ONE = GwMonomial(1, (), -1)


def mono_mul(a: GwMonomial, b: GwMonomial) -> GwMonomial:
    return a * b


@dataclass(frozen=True)
class GwElem:
    """Integer combination of square-class symbols, in canonical form."""

    terms: tuple[tuple[GwMonomial, int], ...]
    num_params: int

    @staticmethod
    def from_coeffs(coeffs: Mapping[GwMonomial, int] | Iterable[tuple[GwMonomial, int]],
                    num_params: int) -> "GwElem":
        acc: dict[GwMonomial, int] = {}
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        for m, c in items:
            if c == 0:
                continue
            assert all(1 <= i <= num_params for i in m.d_subset), "index out of range"
            if m.sign < 0 and m != _MINUS_ONE:
                # <-m> = <1> + <-1> - <m>
                pos = GwMonomial(m.int_part, m.d_subset)
                acc[_ONE] = acc.get(_ONE, 0) + c
                acc[_MINUS_ONE] = acc.get(_MINUS_ONE, 0) + c
                acc[pos] = acc.get(pos, 0) - c
            else:
                acc[m] = acc.get(m, 0) + c
        terms = tuple(sorted(((m, c) for m, c in acc.items() if c != 0)))
        return GwElem(terms, num_params)

    @staticmethod
    def zero(num_params: int = 0) -> "GwElem":
        return GwElem((), num_params)

    @staticmethod
    def symbol(a: int, d_subset: Iterable[int] = (), num_params: int = 0) -> "GwElem":
        return GwElem.from_coeffs({GwMonomial.of(a, d_subset): 1}, num_params)

    @property
    def coeffs(self) -> dict[GwMonomial, int]:
        return dict(self.terms)

    def coeff(self, m: GwMonomial) -> int:
        return self.coeffs.get(m, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def _binop(self, other: "GwElem"):
        assert self.num_params == other.num_params, "mismatched num_params"

    def __add__(self, other: "GwElem") -> "GwElem":
        self._binop(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return GwElem.from_coeffs(acc, self.num_params)

    def __neg__(self) -> "GwElem":
        return GwElem.from_coeffs({m: -c for m, c in self.terms}, self.num_params)

    def __sub__(self, other: "GwElem") -> "GwElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GwElem.from_coeffs({m: c * other for m, c in self.terms}, self.num_params)
        self._binop(other)
        acc: dict[GwMonomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return GwElem.from_coeffs(acc, self.num_params)

    __rmul__ = __mul__

    def rank(self) -> int:
        return sum(c for _, c in self.terms)

    def signature(self, signs: Mapping[int, int]) -> int:
        total = 0
        for m, c in self.terms:
            v = m.sign
            for i in m.d_subset:
                v *= signs[i]
            total += c * v
        return total

    def substitute_square(self, i: int) -> "GwElem":
        """Set d_i := 1 (drop i from every subset); num_params unchanged."""
        if not (1 <= i <= self.num_params):
            raise IndexError(f"parameter index {i} out of range 1..{self.num_params}")
        acc: dict[GwMonomial, int] = {}
        for m, c in self.terms:
            m2 = GwMonomial(m.int_part, tuple(j for j in m.d_subset if j != i), m.sign)
            acc[m2] = acc.get(m2, 0) + c
        return GwElem.from_coeffs(acc, self.num_params)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            if c == 1:
                parts.append(str(m))
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{c}{m}")
        return " + ".join(parts).replace("+ -", "- ")


def h(num_params: int = 0) -> GwElem:
    """The hyperbolic form <1> + <-1>."""
    return GwElem.from_coeffs({_ONE: 1, _MINUS_ONE: 1}, num_params)


def one(num_params: int = 0) -> GwElem:
    return GwElem.from_coeffs({_ONE: 1}, num_params)


def add(e1: GwElem, e2: GwElem) -> GwElem:
    return e1 + e2


def neg(e: GwElem) -> GwElem:
    return -e


def mul(e1: GwElem, e2: GwElem) -> GwElem:
    return e1 * e2


def rank(e: GwElem) -> int:
    return e.rank()


def signature(e: GwElem, signs: Mapping[int, int]) -> int:
    return e.signature(signs)


def substitute_square(e: GwElem, i: int) -> GwElem:
    return e.substitute_square(i)


def _two_shift_partner(m: GwMonomial) -> GwMonomial:
    """<m> <-> <2m>: toggle the factor 2 in the integer part."""
    if m.int_part % 2 == 0:
        return GwMonomial(m.int_part // 2, m.d_subset, m.sign)
    return GwMonomial(2 * m.int_part, m.d_subset, m.sign)


def equals_mod(e1: GwElem, e2: GwElem) -> bool:
    """Equality modulo the lattice generated by 2<m> - 2<2m>.

    On each partner pair {<m>, <2m>} the lattice is spanned by (2, -2), so
    a difference vector lies in it iff the pair coefficients cancel and are
    even; the <-1> coordinate admits no relation.
    """
    assert e1.num_params == e2.num_params, "mismatched num_params"
    diff = (e1 - e2).coeffs
    if diff.get(_MINUS_ONE, 0) != 0:
        return False
    seen = set()
    for m, c in diff.items():
        if m == _MINUS_ONE or m in seen:
            continue
        p = _two_shift_partner(m)
        seen.update((m, p))
        if c + diff.get(p, 0) != 0 or c % 2 != 0:
            return False
    return True


@dataclass(frozen=True)
class BetaForm:
    """Presentation c_{s+1} h + sum_l c_l beta_s^{(l)} + c_0 <1>."""

    h_coeff: int
    beta_coeffs: tuple[int, ...]
    one_coeff: int

    def expand(self, num_params: int | None = None) -> GwElem:
        s = len(self.beta_coeffs) if num_params is None else num_params
        total = self.h_coeff * h(s) + self.one_coeff * one(s)
        for l, c in enumerate(self.beta_coeffs, start=1):
            if c:
                total = total + c * beta_sym(l, s)
        return total


@lru_cache(maxsize=None)
def beta_elem(i: int, num_params: int) -> GwElem:
    """beta_i = <2> + <2 d_i>."""
    assert 1 <= i <= num_params
    return GwElem.from_coeffs(
        {GwMonomial(2, ()): 1, GwMonomial(2, (i,)): 1}, num_params)


@lru_cache(maxsize=None)
def beta_sym(l: int, num_params: int) -> GwElem:
    """l-th elementary symmetric polynomial in beta_1 .. beta_s."""
    import itertools
    total = GwElem.zero(num_params)
    for J in itertools.combinations(range(1, num_params + 1), l):
        prod = one(num_params)
        for i in J:
            prod = prod * beta_elem(i, num_params)
        total = total + prod
    return total


def beta_decompose(e: GwElem) -> BetaForm:
    """Solve e = c_h h + sum c_l beta^{(l)} + c_0 <1> modulo the two-shift lattice.

    The system is triangular in decreasing d-subset size: the only beta
    term hitting monomials with |subset| = l after the larger ones are
    peeled off is c_l * <2^{l mod 2} prod_{i in K} d_i> with K the subset
    itself.  Raises ResidualNotInSpan when no presentation exists.
    """
    import itertools
    s = e.num_params
    remainder = e
    cs = [0] * (s + 1)  # cs[l] for l = 1..s
    for l in range(s, 0, -1):
        coeffs = remainder.coeffs
        value = None
        for K in itertools.combinations(range(1, s + 1), l):
            odd = GwMonomial(1, K)
            ev = GwMonomial(2, K)
            a, b = coeffs.get(odd, 0), coeffs.get(ev, 0)
            c = a + b
            # slice must be reachable from c * <2^{l mod 2} prod_K d> by (2,-2) moves
            anchor = a if l % 2 == 0 else b
            if (anchor - c) % 2 != 0:
                raise ResidualNotInSpan(
                    f"parity failure on subset {K}: ({a},{b}) vs c={c}")
            if value is None:
                value = c
            elif value != c:
                raise ResidualNotInSpan(
                    f"inconsistent coefficient for beta^({l}): {value} vs {c} at {K}")
        if value is None:
            value = 0
        cs[l] = value
        if value:
            remainder = remainder - value * beta_sym(l, s)
    coeffs = remainder.coeffs
    h_coeff = coeffs.get(_MINUS_ONE, 0)
    one_coeff = (coeffs.get(_ONE, 0) - h_coeff) + coeffs.get(GwMonomial(2, ()), 0)
    candidate = h_coeff * h(s) + one_coeff * one(s)
    if not equals_mod(remainder, candidate):
        raise ResidualNotInSpan(
            f"residual {remainder - candidate} not in the two-shift lattice")
    form = BetaForm(h_coeff, tuple(cs[1:]), one_coeff)
    assert equals_mod(form.expand(s), e)
    return form


def trace_kummer(m: int, d: GwMonomial, which: str, num_params: int = 0) -> GwElem:
    """Closed forms of the trace of <1> resp. <x> from L[x]/(x^m - d) to L."""
    if m < 1:
        raise ValueError("m must be positive")
    assert which in ("unit", "x")
    md = GwMonomial.of(m) * d
    if which == "unit":
        if m % 2 == 1:
            return GwElem.from_coeffs({GwMonomial.of(m): 1}, num_params) + \
                ((m - 1) // 2) * h(num_params)
        return GwElem.from_coeffs({GwMonomial.of(m): 1, md: 1}, num_params) + \
            ((m - 2) // 2) * h(num_params)
    if m % 2 == 1:
        return GwElem.from_coeffs({md: 1}, num_params) + ((m - 1) // 2) * h(num_params)
    return (m // 2) * h(num_params)


def display(e: GwElem) -> tuple[int, list[tuple[GwMonomial, int]]]:
    """Split e as h_count * h + residual over sign-positive symbols."""
    n = e.coeff(_MINUS_ONE)
    residual = []
    for m, c in e.terms:
        if m == _MINUS_ONE:
            continue
        if m == _ONE:
            c -= n
        if c != 0:
            residual.append((m, c))
    return n, residual


def assemble(h_count: int, residual: Iterable[tuple[GwMonomial, int]],
             num_params: int) -> GwElem:
    total = h_count * h(num_params)
    return total + GwElem.from_coeffs(dict(residual), num_params)


def to_json_dict(e: GwElem) -> dict:
    n, residual = display(e)
    return {
        "h": n,
        "terms": [
            {"sign": m.sign, "q": m.int_part, "d": list(m.d_subset), "c": c}
            for m, c in residual
        ],
    }
